"""Spectral radius of connected k-graphs by shifted nonnegative power iteration.

For every positive vector x the generalized Rayleigh ratios
``r_i = (A x^{k-1})_i / x_i^{k-1}`` bracket the spectral radius:
``min r <= rho <= max r``. The iteration only has to drive x towards the
Perron vector; each iterate yields a valid enclosure whether or not the
iteration has converged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph, HypergraphError, degree_profile, is_connected
from .tensor import adjacency_apply, k_norm_normalize

__all__ = [
    "SpectralEnclosure",
    "rho_enclose",
    "rho_regular_exact",
    "exact_ratio_bounds",
]

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6
SHIFT = 1.0
_FLOOR = 1e-300


@dataclass(frozen=True)
class SpectralEnclosure:
    lower: float
    upper: float
    x: np.ndarray
    iterations: int
    converged: bool
    shift_used: float
    clamped: bool = False

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper


def _require_spectral_input(H: Hypergraph) -> None:
    if H.m == 0:
        raise HypergraphError("spectral radius needs at least one edge")
    if not is_connected(H):
        raise HypergraphError("spectral radius enclosure needs a connected hypergraph")


def rho_enclose(
    H: Hypergraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralEnclosure:
    """Enclose rho(H) by the shifted iteration ``y = A x^{k-1} + x^{[k-1]}``.

    Returns the intersection of all enclosures seen. ``converged`` is set once
    its width is at most ``tol``; otherwise the best enclosure after
    ``max_iter`` steps is returned with ``converged=False``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_spectral_input(H)
    k = H.k
    # forward error bound for a ratio: k-1 products, up to Delta+1 sums, pow, divide
    slop = (2 * k + int(H.degrees.max()) + 4) * np.finfo(float).eps
    x = k_norm_normalize(np.ones(H.n), k)
    lower, upper = -np.inf, np.inf
    clamped = False
    it = 0
    converged = False
    while it < max_iter:
        xp = x ** (k - 1)
        y = adjacency_apply(H, x) + SHIFT * xp
        ratios = y / xp
        lo, hi = float(ratios.min()), float(ratios.max())
        lower = max(lower, lo - slop * lo - SHIFT)
        upper = min(upper, hi + slop * hi - SHIFT)
        if upper - lower <= tol:
            converged = True
            break
        it += 1
        x = k_norm_normalize(y ** (1.0 / (k - 1)), k)
        if x.min() < _FLOOR:
            x = np.maximum(x, _FLOOR)
            clamped = True
    if clamped:
        log.warning("iterate entries clamped at %g for %r", _FLOOR, H)
    return SpectralEnclosure(lower, upper, x, it, converged, SHIFT, clamped)


def exact_ratio_bounds(H: Hypergraph, x) -> tuple[Fraction, Fraction]:
    """Min and max generalized Rayleigh ratio at positive x, in exact arithmetic.

    The float entries of x are converted exactly, so the result is a rigorous
    enclosure of rho with no rounding error at all.
    """
    xs = [Fraction(float(v)) for v in x]
    if any(v <= 0 for v in xs):
        raise ValueError("exact ratio bounds need a strictly positive vector")
    acc = [Fraction(0)] * H.n
    for e in H.edges:
        for i in e:
            p = Fraction(1)
            for j in e:
                if j != i:
                    p *= xs[j - 1]
            acc[i - 1] += p
    ratios = [a / v ** (H.k - 1) for a, v in zip(acc, xs)]
    return min(ratios), max(ratios)


def rho_regular_exact(H: Hypergraph) -> int:
    """rho of a connected regular k-graph, which is its common degree."""
    _require_spectral_input(H)
    prof = degree_profile(H)
    if prof.delta_min != prof.delta_max:
        raise HypergraphError("rho_regular_exact needs a regular hypergraph")
    return prof.delta_max
