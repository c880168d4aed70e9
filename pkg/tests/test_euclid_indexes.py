import math

import numpy as np
import pytest
from scipy import integrate, optimize

from qcheeger.euclid_indexes import (
    IndexReport,
    alpha_at,
    beta_sq_at,
    beta_sq_boundary_at,
    fraenkel_alpha,
    oscillation_beta_sq,
    potential_integral,
    riesz_zeta,
    zeta_at,
)
from qcheeger.shapes2d import ConvexPolygon, Disc, StarShape, annulus_family, flower

SQUARE = ConvexPolygon([(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)])


def lens(R, r, d):
    """Area of B(0,R) intersected with B(d,r), textbook formula."""
    if d >= R + r:
        return 0.0
    if d <= abs(R - r):
        return math.pi * min(R, r) ** 2
    a = R * R * math.acos((d * d + R * R - r * r) / (2 * d * R))
    b = r * r * math.acos((d * d + r * r - R * R) / (2 * d * r))
    c = 0.5 * math.sqrt((-d + R + r) * (d + R - r) * (d - R + r) * (d + R + r))
    return a + b - c


def annulus_alpha_radial(j, d):
    inner = 1 - 1 / j
    outer = math.sqrt(2 - inner * inner)
    overlap = lens(inner, 1.0, d) + lens(outer, 1.0, d) - lens(1.0, 1.0, d)
    return (2 * math.pi - 2 * overlap) / math.pi


class TestPotential:
    def test_unit_disc_center(self):
        assert potential_integral(Disc(1.0), (0, 0)) == pytest.approx(2 * math.pi, abs=1e-10)

    def test_disc_radius_scaling(self):
        assert potential_integral(Disc(0.4, (1, 2)), (1, 2)) == pytest.approx(2 * math.pi * 0.4, abs=1e-10)

    def test_unit_disc_far_point_monte_carlo(self):
        rng = np.random.default_rng(8)
        acc = 0.0
        n = 10_000_000
        for _ in range(10):
            r = np.sqrt(rng.uniform(size=n // 10))
            th = rng.uniform(0, 2 * np.pi, n // 10)
            acc += float(np.sum(1.0 / np.hypot(r * np.cos(th) - 3.0, r * np.sin(th))))
        mc = math.pi * acc / n
        assert potential_integral(Disc(1.0), (3.0, 0.0)) == pytest.approx(mc, rel=1e-3)

    def test_polygon_against_dblquad(self):
        y = (0.9, 0.3)
        ref, _ = integrate.dblquad(lambda v, u: 1 / math.hypot(u - y[0], v - y[1]), -0.5, 0.5, -0.5, 0.5,
                                   epsabs=1e-11, epsrel=1e-11)
        assert potential_integral(SQUARE, y) == pytest.approx(ref, rel=1e-8)

    def test_star_origin_is_mean_radius(self):
        s = StarShape(0.9, ((3, 0.2, 0.1),))
        ref, _ = integrate.quad(lambda t: float(s.radius(t)), 0, 2 * np.pi)
        assert potential_integral(s, (0, 0)) == pytest.approx(ref, abs=1e-10)

    def test_star_off_center_polar_oracle(self):
        # polar coordinates about y: each ray from y leaves this star once
        s = StarShape(1.0, ((2, 0.1, 0.0),))
        y = np.array([0.2, -0.1])

        def exit_distance(phi):
            d = np.array([math.cos(phi), math.sin(phi)])

            def gap(rho):
                p = y + rho * d
                return math.hypot(p[0], p[1]) - float(s.radius(math.atan2(p[1], p[0])))

            return optimize.brentq(gap, 0.0, 3.0, xtol=1e-14)

        ref, _ = integrate.quad(exit_distance, 0, 2 * np.pi, limit=400, epsabs=1e-12)
        assert potential_integral(s, y) == pytest.approx(ref, abs=1e-9)


class TestAlpha:
    def test_disc_anywhere(self):
        rep = fraenkel_alpha(Disc(1.0, (0.7, -0.2)))
        assert rep.value <= 1e-6
        assert rep.center == pytest.approx((0.7, -0.2), abs=1e-6)

    def test_annulus_family_radial_oracle(self):
        j = 4
        d = np.linspace(0.0, 1.0, 401)
        vals = [annulus_alpha_radial(j, x) for x in d]
        k = int(np.argmin(vals))
        res = optimize.minimize_scalar(lambda x: annulus_alpha_radial(j, x),
                                       bounds=(d[max(k - 1, 0)], d[min(k + 1, 400)]), method="bounded",
                                       options={"xatol": 1e-12})
        rep = fraenkel_alpha(annulus_family(j)[0])
        assert rep.value == pytest.approx(res.fun, abs=1e-4)
        # the optimum sits on a circle around the origin, not at the origin itself
        assert math.hypot(*rep.center) == pytest.approx(res.x, abs=1e-3)
        assert alpha_at(annulus_family(j)[0], (0, 0)) > rep.value + 0.1

    def test_flower_symmetric_oracle(self):
        shape = flower(5, 0.1)
        # r(t) = 1 where sin(10 t) = c; split the integral at those crossings
        c = (math.sqrt(1.005) - 1) / 0.1
        base = np.arange(10) * 2 * np.pi
        cuts = np.sort(np.concatenate(((math.asin(c) + base) / 10, (math.pi - math.asin(c) + base) / 10)))
        edges = np.concatenate(([0.0], cuts, [2 * np.pi]))
        ov = sum(integrate.quad(lambda t: 0.5 * min(float(shape.radius(t)), 1.0) ** 2, a, b,
                                epsabs=1e-14, epsrel=1e-13)[0] for a, b in zip(edges[:-1], edges[1:]))
        origin_value = 2 * (math.pi - ov) / math.pi
        rep = fraenkel_alpha(shape)
        assert 0 < rep.value <= origin_value + 1e-9
        assert rep.value == pytest.approx(origin_value, abs=1e-9)
        assert alpha_at(shape, (0, 0)) == pytest.approx(origin_value, abs=1e-10)

    def test_square_closed_form(self):
        r = 1 / math.sqrt(math.pi)
        d = 0.5
        segment = r * r * math.acos(d / r) - d * math.sqrt(r * r - d * d)
        overlap = math.pi * r * r - 4 * segment
        rep = fraenkel_alpha(SQUARE)
        assert rep.value == pytest.approx(2 * (1 - overlap), abs=1e-9)
        assert rep.center == pytest.approx((0, 0), abs=1e-6)


class TestZeta:
    def test_unit_disc(self):
        rep = riesz_zeta(Disc(1.0))
        assert abs(rep.value) <= 1e-9
        assert rep.center == pytest.approx((0, 0), abs=1e-6)

    def test_translated_disc(self):
        rep = riesz_zeta(Disc(1.0, (0.3, 0.0)))
        assert abs(rep.value) <= 1e-9
        assert rep.center == pytest.approx((0.3, 0.0), abs=1e-6)

    def test_flower_constant_in_j(self):
        vals = [riesz_zeta(flower(j, 0.1)).value for j in (5, 10, 15)]
        assert max(vals) - min(vals) <= 1e-4
        assert vals[0] > 0
        # mean radius oracle at the symmetric center
        assert vals[0] == pytest.approx(2 * math.pi * (1 - 1.005 ** -0.5), abs=1e-9)


class TestBetaSq:
    def test_unit_disc(self):
        assert abs(oscillation_beta_sq(Disc(1.0)).value) <= 1e-9

    def test_flower_15_bound(self):
        shape = flower(15, 0.1)
        value = oscillation_beta_sq(shape).value
        assert value >= (shape.perimeter() - 2 * math.pi) / (2 * math.pi)
        assert (12 / math.sqrt(1.005) - 2 * math.pi) / (2 * math.pi) > 0

    @pytest.mark.parametrize("j", [2, 4, 20])
    def test_annulus_at_least_two(self, j):
        assert oscillation_beta_sq(annulus_family(j)[0]).value >= 2 - 1e-9


IDENTITY_SHAPES = {
    "flower": flower(5, 0.1),
    "square": SQUARE,
    "annulus": annulus_family(4)[0],
    "star": StarShape(0.9, ((1, 0.1, 0.05), (3, -0.08, 0.04)), center=(0.2, -0.1)),
    "disc": Disc(1.3, (0.1, 0.2)),
}


@pytest.mark.parametrize("name", list(IDENTITY_SHAPES))
def test_beta_zeta_identity_at_fixed_centers(name):
    shape = IDENTITY_SHAPES[name]
    r = math.sqrt(shape.area() / math.pi)
    PB = 2 * math.pi * r
    P = shape.perimeter()
    rng = np.random.default_rng(21)
    for y in rng.uniform(-0.7, 0.7, size=(20, 2)):
        lhs = PB * beta_sq_boundary_at(shape, y)
        assert lhs == pytest.approx(P - PB + zeta_at(shape, y), abs=1e-8)
        assert beta_sq_at(shape, y) == pytest.approx(beta_sq_boundary_at(shape, y), abs=1e-8)


class TestInvariants:
    SHAPES = [SQUARE, annulus_family(6)[0], StarShape(1.0, ((2, 0.15, 0.0), (3, 0.0, 0.05)))]

    @pytest.mark.parametrize("idx", range(3))
    def test_nonnegative(self, idx):
        s = self.SHAPES[idx]
        assert riesz_zeta(s).value >= -1e-9
        assert oscillation_beta_sq(s).value >= -1e-9
        assert s.perimeter() >= 2 * math.sqrt(math.pi * s.area()) - 1e-9

    @pytest.mark.parametrize("center", [(0, 0), (2.5, -1.0)])
    def test_zero_at_discs(self, center):
        d = Disc(0.8, center)
        assert fraenkel_alpha(d).value <= 1e-6
        assert abs(riesz_zeta(d).value) <= 1e-6
        assert abs(oscillation_beta_sq(d).value) <= 1e-6

    @pytest.mark.parametrize("idx", range(3))
    def test_translation_invariance(self, idx):
        s = self.SHAPES[idx]
        t = s.translated((1.7, -0.4))
        assert riesz_zeta(t).value == pytest.approx(riesz_zeta(s).value, abs=1e-6)
        assert oscillation_beta_sq(t).value == pytest.approx(oscillation_beta_sq(s).value, abs=1e-6)
        assert fraenkel_alpha(t).value == pytest.approx(fraenkel_alpha(s).value, abs=1e-6)

    @pytest.mark.parametrize("idx", range(3))
    def test_optimizer_soundness(self, idx):
        s = self.SHAPES[idx]
        x0, y0, x1, y1 = s.bounding_box()
        probes = np.random.default_rng(idx).uniform((x0, y0), (x1, y1), size=(100, 2))
        z = riesz_zeta(s)
        a = fraenkel_alpha(s)
        assert all(z.value <= zeta_at(s, p) + 1e-12 for p in probes)
        assert all(a.value <= alpha_at(s, p) + 1e-12 for p in probes)

    def test_report_reproduces_value(self):
        s = self.SHAPES[2]
        for rep, f in ((riesz_zeta(s), zeta_at), (fraenkel_alpha(s), alpha_at), (oscillation_beta_sq(s), beta_sq_at)):
            assert f(s, rep.center) == pytest.approx(rep.value, abs=1e-8)
            assert rep.status == "converged"

    def test_report_serialization(self):
        rep = IndexReport("zeta", 0.5, (0.0, 1.0), "grid-only", 10)
        assert rep.to_dict() == {"index": "zeta", "value": 0.5, "y": [0.0, 1.0], "status": "grid-only", "evaluations": 10}
