"""Small numerical building blocks: Gauss-Legendre panels, golden section,
bisection."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


def panel_nodes(edges: np.ndarray, order: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes/weights for panels delimited by ``edges``."""
    edges = np.asarray(edges, dtype=float)
    x, w = gauss_legendre(order)
    h = np.diff(edges)
    nodes = edges[:-1, None] + h[:, None] * x[None, :]
    weights = h[:, None] * w[None, :]
    return nodes.ravel(), weights.ravel()


def graded_edges(length: float, panels: int, levels: int = 14, ratio: float = 0.15) -> np.ndarray:
    """Panel edges on [0, length], geometrically refined towards both ends.

    Suited to integrands with a logarithmic singularity at the endpoints.
    """
    uniform = np.linspace(0.0, length, panels + 1)
    h = uniform[1]
    left = h * ratio ** np.arange(levels, 0, -1)
    right = length - left[::-1]
    return np.concatenate(([0.0], left, uniform[1:-1], right, [length]))


def golden_section(f, lo: float, hi: float, tol: float = 1e-9, max_iter: int = 200):
    """Minimize a unimodal ``f`` on [lo, hi].

    Returns ``(x, f(x), evaluations)``; the bracket endpoints are compared as
    well so a minimizer pinned to the boundary is reported exactly.
    """
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    evals = 2
    for _ in range(max_iter):
        if abs(b - a) <= tol * (1.0 + abs(a) + abs(b)):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        evals += 1
    x, fx = (c, fc) if fc < fd else (d, fd)
    for end in (lo, hi):
        fe = f(end)
        evals += 1
        if fe <= fx:
            x, fx = end, fe
    return x, fx, evals


def bisect(g, lo: float, hi: float, max_iter: int = 400) -> tuple[float, float]:
    """Bisection for a sign change of ``g`` on [lo, hi].

    Runs until the midpoint no longer moves in floating point. Returns the
    final bracket ``(lo, hi)``.
    """
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo, lo
    if ghi == 0.0:
        return hi, hi
    if (glo > 0) == (ghi > 0):
        raise ValueError(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        gm = g(mid)
        if gm == 0.0:
            return mid, mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return lo, hi


def vector_bisect(g, lo: np.ndarray, hi: np.ndarray, iterations: int = 60) -> np.ndarray:
    """Vectorized bisection over many brackets with sign changes."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    glo = g(lo)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        same = np.sign(gm) == np.sign(glo)
        lo = np.where(same, mid, lo)
        glo = np.where(same, gm, glo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)
