import math

import numpy as np
import pytest
from scipy import optimize

from qcheeger.euclid_cheeger import (
    COMPETITORS,
    CheegerBounds,
    ball_cheeger,
    cheeger_bracket,
    cheeger_convex_2d,
    cheeger_lower_bound_iso,
    cheeger_upper_bound,
    register_competitor,
)
from qcheeger.shapes2d import ConvexPolygon, Disc, StarShape, annulus_family, erode_convex, flower

UNIT_SQUARE = ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def rounded_square_oracle():
    """min over t of P/A for the unit square with corners rounded by radius t."""
    res = optimize.minimize_scalar(lambda t: (4 * (1 - 2 * t) + 2 * math.pi * t) / (1 - (4 - math.pi) * t * t),
                                   bounds=(0.0, 0.5), method="bounded", options={"xatol": 1e-14})
    return res.fun


class TestBall:
    def test_values(self):
        assert ball_cheeger(2, 1.0) == 2
        assert ball_cheeger(3, 1.0) == 3
        assert ball_cheeger(2, 0.5) == 4

    def test_domain(self):
        with pytest.raises(ValueError):
            ball_cheeger(2, 0.0)


class TestLowerBound:
    def test_flower(self):
        assert cheeger_lower_bound_iso(flower(8, 0.1)) == pytest.approx(2.0, abs=1e-12)

    def test_unit_square(self):
        assert cheeger_lower_bound_iso(UNIT_SQUARE) == pytest.approx(2 * math.sqrt(math.pi), rel=1e-14)

    def test_annulus_family(self):
        assert cheeger_lower_bound_iso(annulus_family(7)[0]) == pytest.approx(2.0, abs=1e-12)


class TestUpperBound:
    def test_flower_inscribed_disc(self):
        eps = 0.1
        shape = flower(6, eps)
        disc = Disc(shape.min_radius())
        assert cheeger_upper_bound(shape, disc) == pytest.approx(2 * math.sqrt(1 + eps * eps / 2) / (1 - eps), rel=1e-12)

    def test_disc_itself(self):
        assert cheeger_upper_bound(Disc(1.0), Disc(1.0)) == pytest.approx(2.0)

    def test_annulus_inner_disc(self):
        j = 9
        assert cheeger_upper_bound(annulus_family(j)[0], Disc(1 - 1 / j)) == pytest.approx(2 / (1 - 1 / j))

    def test_containment_violation(self):
        with pytest.raises(ValueError):
            cheeger_upper_bound(flower(5, 0.1), Disc(1.0))


class TestConvex:
    def test_unit_square_closed_form(self):
        sol = cheeger_convex_2d(UNIT_SQUARE)
        assert sol.value == pytest.approx(2 + math.sqrt(math.pi), abs=1e-8)
        assert sol.bounds.exact
        assert sol.bounds.lower <= 2 + math.sqrt(math.pi) + 1e-12

    def test_unit_square_rounding_oracle(self):
        assert cheeger_convex_2d(UNIT_SQUARE).value == pytest.approx(rounded_square_oracle(), abs=1e-8)

    @pytest.mark.parametrize("lam", [0.5, 2.0, 3.0])
    def test_scaling(self, lam):
        h = cheeger_convex_2d(UNIT_SQUARE).value
        assert cheeger_convex_2d(UNIT_SQUARE.scaled(lam)).value == pytest.approx(h / lam, rel=1e-10)

    def test_64gon_near_disc(self):
        p = ConvexPolygon.regular(64)
        p = p.scaled(math.sqrt(math.pi / p.area()))
        assert cheeger_convex_2d(p).value == pytest.approx(2.0, rel=5e-3)

    def test_256gon_within_point_two_percent(self):
        p = ConvexPolygon.regular(256)
        r_eq = math.sqrt(p.area() / math.pi)
        assert cheeger_convex_2d(p).value == pytest.approx(ball_cheeger(2, r_eq), rel=2e-3)

    def test_area_residual(self):
        hexagon = ConvexPolygon.regular(6)
        sol = cheeger_convex_2d(hexagon)
        core = erode_convex(hexagon, sol.t)
        assert abs(core.area() - math.pi * sol.t ** 2) <= 1e-10 * hexagon.area()

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            cheeger_convex_2d(UNIT_SQUARE, tol=0.0)


class TestBracket:
    @pytest.mark.parametrize("j", [5, 10])
    def test_flower(self, j):
        b = cheeger_bracket(flower(j, 0.1))
        assert b.lower == pytest.approx(2.0, abs=1e-9)
        assert b.upper == pytest.approx(2 * math.sqrt(1.005) / 0.9, abs=1e-9)
        assert not b.exact

    def test_disc_exact(self):
        b = cheeger_bracket(Disc(1.0))
        assert (b.lower, b.upper, b.exact) == (2.0, 2.0, True)

    def test_annulus_20(self):
        b = cheeger_bracket(annulus_family(20)[0])
        assert b.lower == pytest.approx(2.0, abs=1e-12)
        assert b.upper == pytest.approx(2 / (1 - 1 / 20), abs=1e-12)

    @pytest.mark.parametrize("lam", [0.5, 2.0])
    def test_scaling(self, lam):
        for shape in (flower(5, 0.1), annulus_family(4)[0], UNIT_SQUARE, Disc(1.0, (0.2, 0.0))):
            b, bs = cheeger_bracket(shape), cheeger_bracket(shape.scaled(lam))
            assert bs.lower == pytest.approx(b.lower / lam, rel=1e-9)
            assert bs.upper == pytest.approx(b.upper / lam, rel=1e-9)

    def test_ordering_on_corpus(self):
        rng = np.random.default_rng(2)
        shapes = [StarShape(1.0, ((k, 0.2 * rng.uniform(-1, 1), 0.2 * rng.uniform(-1, 1)),)) for k in (1, 2, 5)]
        shapes += [annulus_family(j)[0] for j in (2, 3)] + [ConvexPolygon.regular(5)]
        for s in shapes:
            b = cheeger_bracket(s)
            assert 0 < b.lower <= b.upper

    def test_registered_competitor_is_used(self):
        shape = StarShape(1.0, ((4, 0.3, 0.0),))
        before = cheeger_bracket(shape).upper

        def fake(s):
            return (0.999 * before, "registered") if s is shape else None

        register_competitor(fake)
        try:
            b = cheeger_bracket(shape)
        finally:
            COMPETITORS.remove(fake)
        assert (b.upper, b.witness) == (0.999 * before, "registered")
        assert cheeger_bracket(shape).upper == before


class TestBoundsType:
    def test_rejects_inverted(self):
        with pytest.raises(ValueError):
            CheegerBounds(3.0, 2.0, False, "x")

    def test_to_dict(self):
        d = CheegerBounds(2.0, 2.5, False, "w").to_dict()
        assert d == {"lower": 2.0, "upper": 2.5, "exact": False, "witness": "w"}
