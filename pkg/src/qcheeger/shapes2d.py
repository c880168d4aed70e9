"""Planar sets and their measures.

Five kinds of shape are supported: :class:`Disc`, :class:`Annulus`,
:class:`ConvexPolygon`, :class:`StarShape` (a trigonometric polar profile) and
:class:`ShapeUnion` of interior-disjoint components. Every shape is immutable
and exposes

* ``area()`` / ``perimeter()``
* ``contains(points)``
* ``potential(ys)``: the Riesz-type potential ``int_shape dx / |x - y|``
* ``disc_overlap(y, r)``: area of the intersection with the disc ``B_r(y)``
* ``normal_deviation(y)``: ``int_boundary |nu(x) - (x-y)/|x-y||^2 ds``

so that the asymmetry indexes in :mod:`qcheeger.euclid_indexes` can be written
once for all kinds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy import integrate, optimize

from ._numerics import graded_edges, panel_nodes, vector_bisect

TWO_PI = 2.0 * math.pi


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    return pts.reshape(-1, 2)


def _wrap_angles(theta: np.ndarray) -> np.ndarray:
    return np.mod(theta, TWO_PI)


def _lens_area(R: float, r: float, d: float) -> float:
    """Area of the intersection of two discs of radii R, r at center distance d."""
    if d >= R + r:
        return 0.0
    if d <= abs(R - r):
        return math.pi * min(R, r) ** 2
    # clamp guards acos against rounding just outside [-1, 1]
    ca = max(-1.0, min(1.0, (d * d + R * R - r * r) / (2.0 * d * R)))
    cb = max(-1.0, min(1.0, (d * d + r * r - R * R) / (2.0 * d * r)))
    a = math.acos(ca)
    b = math.acos(cb)
    return R * R * (a - 0.5 * math.sin(2 * a)) + r * r * (b - 0.5 * math.sin(2 * b))


def _arcs_inside(psi: np.ndarray, r: float, y: np.ndarray, inside) -> float:
    """Green contribution ``r^2/2 * (total angle)`` of the circle arcs of
    ``B_r(y)`` lying inside a set, given the crossing angles ``psi``."""
    psi = np.sort(_wrap_angles(np.asarray(psi, dtype=float)))
    if psi.size == 0:
        return 0.0
    nxt = np.roll(psi, -1)
    nxt[-1] += TWO_PI
    span = nxt - psi
    mid = psi + 0.5 * span
    mids = y[None, :] + r * np.column_stack((np.cos(mid), np.sin(mid)))
    keep = inside(mids) & (span > 0)
    return 0.5 * r * r * float(span[keep].sum())


def _circle_deviation(center, radius: float, y, outward: bool, n: int = 4096) -> float:
    """``int |nu - (x-y)/|x-y||^2 ds`` over a full circle, periodic trapezoid."""
    th = np.linspace(0.0, TWO_PI, n, endpoint=False)
    e = np.column_stack((np.cos(th), np.sin(th)))
    x = np.asarray(center, dtype=float)[None, :] + radius * e
    nu = e if outward else -e
    diff = x - np.asarray(y, dtype=float)[None, :]
    u = diff / np.linalg.norm(diff, axis=1)[:, None]
    integrand = np.sum((nu - u) ** 2, axis=1) * radius
    return float(integrand.mean() * TWO_PI)


# ---------------------------------------------------------------------------
# Star shapes (trigonometric polar profiles)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarShape:
    """Set bounded by ``r(t) = scale * (1 + sum_k a_k sin(k t) + b_k cos(k t))``
    around ``center``.

    ``harmonics`` holds ``(k, a_k, b_k)`` triples with distinct ``k >= 1``.
    """

    scale: float
    harmonics: tuple[tuple[int, float, float], ...] = ()
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("star shape scale must be positive")
        merged: dict[int, list[float]] = {}
        for k, a, b in self.harmonics:
            if int(k) != k or k < 1:
                raise ValueError(f"harmonic index must be a positive integer, got {k!r}")
            acc = merged.setdefault(int(k), [0.0, 0.0])
            acc[0] += float(a)
            acc[1] += float(b)
        object.__setattr__(
            self, "harmonics", tuple((k, v[0], v[1]) for k, v in sorted(merged.items()))
        )
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))
        if self.min_radius() <= 0:
            raise ValueError("polar profile must stay positive to bound a simple curve")

    @property
    def max_harmonic(self) -> int:
        return max((k for k, _, _ in self.harmonics), default=0)

    def radius(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        out = np.ones_like(theta)
        for k, a, b in self.harmonics:
            out = out + a * np.sin(k * theta) + b * np.cos(k * theta)
        return self.scale * out

    def radius_derivative(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for k, a, b in self.harmonics:
            out = out + k * (a * np.cos(k * theta) - b * np.sin(k * theta))
        return self.scale * out

    def min_radius(self) -> float:
        if len(self.harmonics) == 0:
            return self.scale
        if len(self.harmonics) == 1:
            _, a, b = self.harmonics[0]
            return self.scale * (1.0 - math.hypot(a, b))
        n = max(1 << 14, 64 * self.max_harmonic)
        th = np.linspace(0.0, TWO_PI, n, endpoint=False)
        vals = self.radius(th)
        i = int(np.argmin(vals))
        h = TWO_PI / n
        res = optimize.minimize_scalar(
            lambda t: float(self.radius(t)),
            bounds=(th[i] - h, th[i] + h),
            method="bounded",
            options={"xatol": 1e-13},
        )
        return float(min(res.fun, vals[i]))

    def max_radius(self) -> float:
        return self.scale * (1.0 + sum(abs(a) + abs(b) for _, a, b in self.harmonics))

    # measures --------------------------------------------------------------

    def area(self) -> float:
        # orthogonality of the trigonometric system
        sq = sum(a * a + b * b for _, a, b in self.harmonics)
        return 0.5 * self.scale**2 * (TWO_PI + math.pi * sq)

    def perimeter(self, tol: float = 1e-10) -> float:
        """Periodic trapezoid on ``sqrt(r^2 + r'^2)``, doubling until stable."""
        n = max(256, 16 * self.max_harmonic)
        prev = None
        while True:
            th = np.linspace(0.0, TWO_PI, n, endpoint=False)
            val = float(np.hypot(self.radius(th), self.radius_derivative(th)).mean() * TWO_PI)
            if prev is not None and abs(val - prev) <= tol * max(1.0, val):
                return val
            if n > 1 << 22:
                return val
            prev = val
            n *= 2

    def boundary(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        r = self.radius(theta)
        return np.column_stack((self.center[0] + r * np.cos(theta), self.center[1] + r * np.sin(theta)))

    def boundary_points(self, n: int) -> np.ndarray:
        return self.boundary(np.linspace(0.0, TWO_PI, n, endpoint=False))

    def contains(self, points, tol: float = 0.0) -> np.ndarray:
        p = _as_points(points) - np.asarray(self.center)[None, :]
        th = np.arctan2(p[:, 1], p[:, 0])
        return np.hypot(p[:, 0], p[:, 1]) < self.radius(th) + tol

    def bounding_box(self) -> tuple[float, float, float, float]:
        n = max(4096, 64 * self.max_harmonic)
        pts = self.boundary_points(n)
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        pad = 1e-3 * self.max_radius()
        return lo[0] - pad, lo[1] - pad, hi[0] + pad, hi[1] + pad

    def translated(self, v) -> "StarShape":
        return StarShape(self.scale, self.harmonics, (self.center[0] + v[0], self.center[1] + v[1]))

    def scaled(self, lam: float) -> "StarShape":
        return StarShape(self.scale * lam, self.harmonics, (self.center[0] * lam, self.center[1] * lam))

    # potential -------------------------------------------------------------

    def _angular_rule(self) -> tuple[np.ndarray, np.ndarray]:
        panels = max(32, 8 * self.max_harmonic)
        return panel_nodes(graded_edges(TWO_PI, panels), order=16)

    def potential(self, ys) -> np.ndarray:
        """``int dx/|x - y|`` in polar coordinates about the star center.

        The radial integral has the closed form
        ``D(R) - d + b [log(R - b + D(R)) - log(d - b)]`` with ``b = w.e``,
        ``d = |w|``, ``w = y - center``; the angular integral starts at the
        direction of ``w`` where the integrand has a log singularity, and uses
        panels graded towards both ends of the period.
        """
        ys = _as_points(ys)
        offs, wts = self._angular_rule()
        out = np.empty(len(ys))
        cos_o, sin_o = np.cos(offs), np.sin(offs)
        chunk = max(1, 2_000_000 // offs.size)
        for start in range(0, len(ys), chunk):
            w = ys[start : start + chunk] - np.asarray(self.center)[None, :]
            d = np.hypot(w[:, 0], w[:, 1])[:, None]
            phi_y = np.arctan2(w[:, 1], w[:, 0])[:, None]
            R = self.radius(phi_y + offs[None, :])
            b = d * cos_o[None, :]
            perp = d * np.abs(sin_o)[None, :]
            D = np.sqrt((R - b) ** 2 + perp**2)
            with np.errstate(divide="ignore", invalid="ignore"):
                log_perp2 = 2.0 * np.log(perp)
                log_a = np.where(R >= b, np.log(R - b + D), log_perp2 - np.log(D + b - R))
                log_b = np.where(b <= 0, np.log(d - b), log_perp2 - np.log(d + b))
                # perp^2 cancels analytically when the ray stops short of y
                short = (b > 0) & (R < b)
                log_ratio = np.where(short, np.log(d + b) - np.log(D + b - R), log_a - log_b)
                inner = D - d + b * log_ratio
            inner = np.where(d == 0.0, R, inner)
            out[start : start + chunk] = inner @ wts
        return out

    # overlap with a disc ---------------------------------------------------

    def disc_overlap(self, y, r: float) -> float:
        """Area of ``self & B_r(y)`` by Green's theorem on the boundary of the
        intersection (star arcs inside the disc plus circle arcs inside the star)."""
        y = np.asarray(y, dtype=float)
        n = max(4096, 64 * self.max_harmonic)
        th = np.linspace(0.0, TWO_PI, n + 1)

        def g(t):
            p = self.boundary(np.ravel(t)) - y[None, :]
            return (p[:, 0] ** 2 + p[:, 1] ** 2 - r * r).reshape(np.shape(t))

        gv = g(th)
        flips = np.nonzero(np.sign(gv[:-1]) * np.sign(gv[1:]) < 0)[0]
        exact = np.nonzero(gv[:-1] == 0.0)[0]
        if flips.size == 0 and exact.size == 0:
            if gv[0] < 0:
                return self.area()
            if self.contains(y + np.array([r, 0.0]))[0]:
                return math.pi * r * r
            return 0.0
        roots = np.concatenate((vector_bisect(g, th[flips], th[flips + 1]), th[exact]))
        roots = np.sort(roots)
        # star pieces between consecutive crossings
        nxt = np.roll(roots, -1)
        nxt[-1] += TWO_PI
        total = 0.0
        panels = max(8, 8 * self.max_harmonic)
        for lo, hi in zip(roots, nxt):
            if hi - lo <= 0:
                continue
            if g(np.array([0.5 * (lo + hi)]))[0] >= 0:
                continue
            k = max(1, int(math.ceil((hi - lo) / TWO_PI * panels)))
            nodes, wts = panel_nodes(np.linspace(lo, hi, k + 1), order=16)
            total += 0.5 * float(np.dot(wts, self._green_integrand(nodes, y)))
        cross = self.boundary(roots) - y[None, :]
        psi = np.arctan2(cross[:, 1], cross[:, 0])
        total += _arcs_inside(psi, r, y, self.contains)
        return total

    def _green_integrand(self, theta, y) -> np.ndarray:
        r = self.radius(theta)
        dr = self.radius_derivative(theta)
        c, s = np.cos(theta), np.sin(theta)
        px = self.center[0] + r * c - y[0]
        py = self.center[1] + r * s - y[1]
        dx = dr * c - r * s
        dy = dr * s + r * c
        return px * dy - py * dx

    # boundary deviation ------------------------------------------------------

    def normal_deviation(self, y, tol: float = 1e-12) -> float:
        """``int_boundary |nu(x) - (x-y)/|x-y||^2 ds`` by periodic trapezoid."""
        y = np.asarray(y, dtype=float)
        n = max(1024, 32 * self.max_harmonic)
        prev = None
        while True:
            th = np.linspace(0.0, TWO_PI, n, endpoint=False)
            r = self.radius(th)
            dr = self.radius_derivative(th)
            c, s = np.cos(th), np.sin(th)
            tx, ty = dr * c - r * s, dr * s + r * c
            speed = np.hypot(tx, ty)
            nu = np.column_stack((ty, -tx)) / speed[:, None]
            diff = np.column_stack((self.center[0] + r * c - y[0], self.center[1] + r * s - y[1]))
            u = diff / np.linalg.norm(diff, axis=1)[:, None]
            val = float((np.sum((nu - u) ** 2, axis=1) * speed).mean() * TWO_PI)
            if prev is not None and abs(val - prev) <= tol * max(1.0, abs(val)):
                return val
            if n > 1 << 20:
                return val
            prev = val
            n *= 2


# ---------------------------------------------------------------------------
# Discs and annuli
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Disc:
    radius: float
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("disc radius must be positive")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    def area(self) -> float:
        return math.pi * self.radius**2

    def perimeter(self, tol: float = 1e-10) -> float:
        return TWO_PI * self.radius

    def contains(self, points, tol: float = 0.0) -> np.ndarray:
        p = _as_points(points) - np.asarray(self.center)[None, :]
        return np.hypot(p[:, 0], p[:, 1]) < self.radius + tol

    def boundary_points(self, n: int) -> np.ndarray:
        th = np.linspace(0.0, TWO_PI, n, endpoint=False)
        return np.column_stack(
            (self.center[0] + self.radius * np.cos(th), self.center[1] + self.radius * np.sin(th))
        )

    def bounding_box(self):
        cx, cy = self.center
        return cx - self.radius, cy - self.radius, cx + self.radius, cy + self.radius

    def translated(self, v) -> "Disc":
        return Disc(self.radius, (self.center[0] + v[0], self.center[1] + v[1]))

    def scaled(self, lam: float) -> "Disc":
        return Disc(self.radius * lam, (self.center[0] * lam, self.center[1] * lam))

    def as_star(self) -> StarShape:
        return StarShape(self.radius, (), self.center)

    def potential(self, ys) -> np.ndarray:
        return self.as_star().potential(ys)

    def disc_overlap(self, y, r: float) -> float:
        d = math.hypot(y[0] - self.center[0], y[1] - self.center[1])
        return _lens_area(self.radius, r, d)

    def normal_deviation(self, y, tol: float = 1e-12) -> float:
        return _circle_deviation(self.center, self.radius, y, outward=True)


@dataclass(frozen=True)
class Annulus:
    inner: float
    outer: float
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not 0 < self.inner < self.outer:
            raise ValueError("annulus needs 0 < inner < outer")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    def area(self) -> float:
        return math.pi * (self.outer**2 - self.inner**2)

    def perimeter(self, tol: float = 1e-10) -> float:
        return TWO_PI * (self.inner + self.outer)

    def contains(self, points, tol: float = 0.0) -> np.ndarray:
        p = _as_points(points) - np.asarray(self.center)[None, :]
        d = np.hypot(p[:, 0], p[:, 1])
        return (d > self.inner - tol) & (d < self.outer + tol)

    def boundary_points(self, n: int) -> np.ndarray:
        n_out = max(1, int(round(n * self.outer / (self.inner + self.outer))))
        return np.vstack(
            (Disc(self.outer, self.center).boundary_points(n_out),
             Disc(self.inner, self.center).boundary_points(max(1, n - n_out)))
        )

    def bounding_box(self):
        return Disc(self.outer, self.center).bounding_box()

    def translated(self, v) -> "Annulus":
        return Annulus(self.inner, self.outer, (self.center[0] + v[0], self.center[1] + v[1]))

    def scaled(self, lam: float) -> "Annulus":
        return Annulus(self.inner * lam, self.outer * lam, (self.center[0] * lam, self.center[1] * lam))

    def potential(self, ys) -> np.ndarray:
        return Disc(self.outer, self.center).potential(ys) - Disc(self.inner, self.center).potential(ys)

    def disc_overlap(self, y, r: float) -> float:
        d = math.hypot(y[0] - self.center[0], y[1] - self.center[1])
        return _lens_area(self.outer, r, d) - _lens_area(self.inner, r, d)

    def normal_deviation(self, y, tol: float = 1e-12) -> float:
        return _circle_deviation(self.center, self.outer, y, outward=True) + _circle_deviation(
            self.center, self.inner, y, outward=False
        )


# ---------------------------------------------------------------------------
# Convex polygons
# ---------------------------------------------------------------------------


def _shoelace(v: np.ndarray) -> float:
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def _clip_halfplane(v: np.ndarray, n: np.ndarray, c: float) -> np.ndarray:
    """Sutherland-Hodgman clip of a convex polygon by ``n.x <= c``."""
    if len(v) == 0:
        return v
    s = v @ n - c
    out = []
    m = len(v)
    for i in range(m):
        j = (i + 1) % m
        si, sj = s[i], s[j]
        if si <= 0:
            out.append(v[i])
        if (si < 0 < sj) or (sj < 0 < si):
            t = si / (si - sj)
            out.append(v[i] + t * (v[j] - v[i]))
    return np.array(out).reshape(-1, 2)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon; vertices are stored counterclockwise."""

    vertices: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float).reshape(-1, 2)
        if len(v) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if _shoelace(v) < 0:
            v = v[::-1].copy()
        e = np.roll(v, -1, axis=0) - v
        turn = e[:, 0] * np.roll(e, -1, axis=0)[:, 1] - e[:, 1] * np.roll(e, -1, axis=0)[:, 0]
        scale = float(np.max(np.linalg.norm(e, axis=1))) ** 2
        if np.any(turn <= 1e-12 * scale):
            raise ValueError("polygon must be strictly convex with no three collinear vertices")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @classmethod
    def regular(cls, n: int, circumradius: float = 1.0, center=(0.0, 0.0), phase: float = 0.0):
        th = phase + TWO_PI * np.arange(n) / n
        return cls(np.column_stack((center[0] + circumradius * np.cos(th), center[1] + circumradius * np.sin(th))))

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and np.array_equal(self.vertices, other.vertices)

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def edges(self):
        """Unit tangents, outward unit normals, offsets ``c`` with ``n.x <= c``, lengths."""
        v = self.vertices
        e = np.roll(v, -1, axis=0) - v
        length = np.linalg.norm(e, axis=1)
        t = e / length[:, None]
        n = np.column_stack((t[:, 1], -t[:, 0]))
        c = np.sum(n * v, axis=1)
        return t, n, c, length

    def area(self) -> float:
        return _shoelace(self.vertices)

    def perimeter(self, tol: float = 1e-10) -> float:
        return float(self.edges()[3].sum())

    def contains(self, points, tol: float = 0.0) -> np.ndarray:
        _, n, c, _ = self.edges()
        p = _as_points(points)
        return np.all(p @ n.T < c[None, :] + tol, axis=1)

    def boundary_points(self, n: int) -> np.ndarray:
        _, _, _, length = self.edges()
        per = length.sum()
        s = np.linspace(0.0, per, n, endpoint=False)
        cum = np.concatenate(([0.0], np.cumsum(length)))
        idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(length) - 1)
        frac = (s - cum[idx]) / length[idx]
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        return v[idx] + frac[:, None] * (w[idx] - v[idx])

    def bounding_box(self):
        lo, hi = self.vertices.min(axis=0), self.vertices.max(axis=0)
        return lo[0], lo[1], hi[0], hi[1]

    def translated(self, v) -> "ConvexPolygon":
        return ConvexPolygon(self.vertices + np.asarray(v, dtype=float)[None, :])

    def scaled(self, lam: float) -> "ConvexPolygon":
        return ConvexPolygon(self.vertices * lam)

    def inradius(self) -> float:
        """Largest ``t`` with a nonempty inner parallel body (linear program)."""
        _, n, c, _ = self.edges()
        A = np.column_stack((n, np.ones(len(n))))
        res = optimize.linprog(
            [0.0, 0.0, -1.0], A_ub=A, b_ub=c, bounds=[(None, None), (None, None), (0, None)], method="highs"
        )
        if not res.success:
            raise RuntimeError(f"inradius LP failed: {res.message}")
        return float(res.x[2])

    def eroded_vertices(self, t: float) -> np.ndarray:
        """Vertices of ``{x : dist(x, complement) >= t}``; may be degenerate."""
        _, n, c, _ = self.edges()
        v = np.array(self.vertices)
        for k in range(len(n)):
            v = _clip_halfplane(v, n[k], c[k] - t)
            if len(v) == 0:
                break
        return v

    def potential(self, ys) -> np.ndarray:
        """Closed form: the fan of triangles ``(y, P, Q)`` over the edges gives
        ``sum h [asinh(s_Q/|h|) - asinh(s_P/|h|)]`` with ``h`` the signed distance
        from y to the edge line and ``s`` the along-edge coordinates."""
        ys = _as_points(ys)
        t, n, _, length = self.edges()
        P = self.vertices
        rel = P[None, :, :] - ys[:, None, :]
        h = np.einsum("mkj,kj->mk", rel, n)
        sP = np.einsum("mkj,kj->mk", rel, t)
        sQ = sP + length[None, :]
        ah = np.abs(h)
        with np.errstate(divide="ignore", invalid="ignore"):
            term = h * (np.arcsinh(sQ / ah) - np.arcsinh(sP / ah))
        term = np.where(ah > 0, term, 0.0)
        return term.sum(axis=1)

    def disc_overlap(self, y, r: float) -> float:
        y = np.asarray(y, dtype=float)
        v = self.vertices - y[None, :]
        w = np.roll(v, -1, axis=0)
        crossings = []
        total = 0.0
        for P, Q in zip(v, w):
            dvec = Q - P
            a = dvec @ dvec
            b = P @ dvec
            c = P @ P - r * r
            disc = b * b - a * c
            cuts = [0.0]
            if disc > 0:
                sq = math.sqrt(disc)
                for u in ((-b - sq) / a, (-b + sq) / a):
                    if 0.0 < u < 1.0:
                        cuts.append(u)
                        crossings.append(P + u * dvec)
            cuts.append(1.0)
            for u0, u1 in zip(cuts[:-1], cuts[1:]):
                mid = P + 0.5 * (u0 + u1) * dvec
                if mid @ mid < r * r:
                    p0, p1 = P + u0 * dvec, P + u1 * dvec
                    total += 0.5 * (p0[0] * p1[1] - p0[1] * p1[0])
        if not crossings:
            if v[0] @ v[0] < r * r:
                return self.area()
            if self.contains(y + np.array([r, 0.0]))[0]:
                return math.pi * r * r
            return 0.0
        cr = np.array(crossings)
        psi = np.arctan2(cr[:, 1], cr[:, 0])
        total += _arcs_inside(psi, r, y, self.contains)
        return total

    def normal_deviation(self, y, tol: float = 1e-12) -> float:
        """Edge-by-edge adaptive quadrature of ``|nu - (x-y)/|x-y||^2``."""
        y = np.asarray(y, dtype=float)
        t, n, _, length = self.edges()
        total = 0.0
        for P, tk, nk, L in zip(self.vertices, t, n, length):

            def f(s, P=P, tk=tk, nk=nk):
                d = P + s * tk - y
                u = d / math.hypot(d[0], d[1])
                return (nk[0] - u[0]) ** 2 + (nk[1] - u[1]) ** 2

            foot = float((y - P) @ tk)
            pts = [foot] if 0.0 < foot < L else None
            val, _ = integrate.quad(f, 0.0, L, points=pts, epsabs=tol, epsrel=tol, limit=400)
            total += val
        return total


# ---------------------------------------------------------------------------
# Unions
# ---------------------------------------------------------------------------


Primitive = Union[Disc, Annulus, ConvexPolygon, StarShape]


@dataclass(frozen=True)
class ShapeUnion:
    """Finite union of components with pairwise disjoint closures.

    Measures are additive; every component boundary counts toward the perimeter.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a union needs at least one component")
        for c in comps:
            if isinstance(c, ShapeUnion):
                raise TypeError("nested unions are not supported; flatten them first")
        _check_disjoint(comps)
        object.__setattr__(self, "components", comps)

    def area(self) -> float:
        return sum(c.area() for c in self.components)

    def perimeter(self, tol: float = 1e-10) -> float:
        return sum(c.perimeter(tol) for c in self.components)

    def contains(self, points, tol: float = 0.0) -> np.ndarray:
        pts = _as_points(points)
        out = np.zeros(len(pts), dtype=bool)
        for c in self.components:
            out |= c.contains(pts, tol)
        return out

    def boundary_points(self, n: int) -> np.ndarray:
        pers = np.array([c.perimeter() for c in self.components])
        counts = np.maximum(1, np.round(n * pers / pers.sum()).astype(int))
        return np.vstack([c.boundary_points(int(k)) for c, k in zip(self.components, counts)])

    def bounding_box(self):
        boxes = np.array([c.bounding_box() for c in self.components])
        return boxes[:, 0].min(), boxes[:, 1].min(), boxes[:, 2].max(), boxes[:, 3].max()

    def translated(self, v) -> "ShapeUnion":
        return ShapeUnion(tuple(c.translated(v) for c in self.components))

    def scaled(self, lam: float) -> "ShapeUnion":
        return ShapeUnion(tuple(c.scaled(lam) for c in self.components))

    def potential(self, ys) -> np.ndarray:
        return sum(c.potential(ys) for c in self.components)

    def disc_overlap(self, y, r: float) -> float:
        return sum(c.disc_overlap(y, r) for c in self.components)

    def normal_deviation(self, y, tol: float = 1e-12) -> float:
        return sum(c.normal_deviation(y, tol) for c in self.components)


def _radial_extent(c) -> tuple[tuple[float, float], float, float] | None:
    """Center and radial range for round components, else None."""
    if isinstance(c, Disc):
        return c.center, 0.0, c.radius
    if isinstance(c, Annulus):
        return c.center, c.inner, c.outer
    return None


def _check_disjoint(comps) -> None:
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            a, b = _radial_extent(comps[i]), _radial_extent(comps[j])
            if a is not None and b is not None and np.allclose(a[0], b[0]):
                (_, lo1, hi1), (_, lo2, hi2) = a, b
                if not (hi1 < lo2 or hi2 < lo1):
                    raise ValueError("concentric components overlap or share a boundary circle")
                continue
            # generic case: sample each boundary against the other set
            pa = comps[i].boundary_points(512)
            pb = comps[j].boundary_points(512)
            if comps[j].contains(pa, tol=-1e-12).any() or comps[i].contains(pb, tol=-1e-12).any():
                raise ValueError("union components must have disjoint interiors")


Shape2D = Union[Disc, Annulus, ConvexPolygon, StarShape, ShapeUnion]


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def area(shape: Shape2D) -> float:
    return shape.area()


def perimeter(shape: Shape2D, tol: float = 1e-10) -> float:
    return shape.perimeter(tol)


def equivalent_ball(shape: Shape2D) -> Disc:
    """Disc centered at the origin with the same area as ``shape``."""
    return Disc(math.sqrt(shape.area() / math.pi))


def inscribed_concentric_radius(shape) -> float:
    """Radius of the largest disc about the star center contained in the shape."""
    if isinstance(shape, Disc):
        return shape.radius
    if not isinstance(shape, StarShape):
        raise TypeError("inscribed_concentric_radius needs a StarShape or Disc")
    return shape.min_radius()


def erode_convex(polygon: ConvexPolygon, t: float) -> ConvexPolygon | None:
    """Inner parallel body at distance ``t``; ``None`` once ``t`` reaches the inradius."""
    if t < 0:
        raise ValueError("erosion distance must be nonnegative")
    if t == 0:
        return polygon
    v = polygon.eroded_vertices(t)
    if len(v) < 3:
        return None
    scale = max(float(np.ptp(polygon.vertices, axis=0).max()), 1e-300)
    # drop vertices merged by the clip
    keep = [v[0]]
    for p in v[1:]:
        if np.linalg.norm(p - keep[-1]) > 1e-12 * scale:
            keep.append(p)
    if len(keep) > 1 and np.linalg.norm(keep[0] - keep[-1]) <= 1e-12 * scale:
        keep.pop()
    v = np.array(keep)
    if len(v) < 3 or _shoelace(v) <= 1e-14 * scale * scale:
        return None
    # drop (near) collinear vertices left behind by vanished edges
    while len(v) > 3:
        e = np.roll(v, -1, axis=0) - v
        ep = np.roll(e, 1, axis=0)
        turn = ep[:, 0] * e[:, 1] - ep[:, 1] * e[:, 0]
        i = int(np.argmin(turn))
        if turn[i] > 1e-12 * scale * scale:
            break
        v = np.delete(v, i, axis=0)
    try:
        return ConvexPolygon(v)
    except ValueError:
        return None


def flower(j: int, eps: float) -> StarShape:
    """``r(t) = (1 + eps^2/2)^(-1/2) (1 + eps sin(2 j t))``; area exactly pi."""
    if int(j) != j or j < 1:
        raise ValueError("j must be a positive integer")
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1)")
    return StarShape((1.0 + 0.5 * eps * eps) ** -0.5, ((2 * int(j), eps, 0.0),))


def annulus_eps(j: int) -> float:
    """Outer shell width so that ``B_{1-1/j} u A_{1,1+eps}`` has area pi."""
    return math.sqrt(2.0 - (1.0 - 1.0 / j) ** 2) - 1.0


def annulus_family(j: int) -> tuple[ShapeUnion, float]:
    """Disc of radius ``1 - 1/j`` plus the shell ``1 < |x| < 1 + eps(j)``."""
    if int(j) != j or j < 2:
        raise ValueError("annulus family needs an integer j >= 2")
    eps = annulus_eps(int(j))
    return ShapeUnion((Disc(1.0 - 1.0 / j), Annulus(1.0, 1.0 + eps))), eps
