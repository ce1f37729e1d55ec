"""Minimum H-eigenvalue of even-order k-graphs.

For even k the minimum H-eigenvalue is the minimum of ``x -> k sum_e x^e`` over
the unit k-norm sphere. ``mu_estimate`` searches that sphere with multi-start
projected gradient descent, so its value is an upper bound on mu: it can
never undershoot the true minimum, only fail to reach it.

Odd-bipartite instances have ``mu == -rho`` and are handled exactly by
flipping the Perron vector on the bipartition class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph, HypergraphError, components, is_connected
from .spectral import SpectralEnclosure, rho_enclose
from .structure import odd_bipartition
from .tensor import adjacency_apply, eigen_residual, k_norm_normalize, rayleigh

__all__ = [
    "MuEstimate",
    "rayleigh_gradient",
    "mu_estimate",
    "mu_odd_bipartite_exact",
    "mu_estimate_components",
    "sub_hypergraph",
]

STEP0 = 0.5
SHRINK = 0.5
ARMIJO = 1e-4
MAX_SHRINKS = 60
DEFAULT_RESTARTS = 64
DEFAULT_TOL = 1e-6
# a step that lowers the value by less than this (relative) counts as stalled
STALL = 1e-15
DEFAULT_MAX_STEPS = 10**5


@dataclass(frozen=True)
class MuEstimate:
    value: float
    x: np.ndarray
    restarts: int
    method: str  # "exact-odd-bipartite" | "projected-descent"
    residual: float
    interval: tuple[float, float] | None = None


def rayleigh_gradient(H: Hypergraph, x) -> np.ndarray:
    """Gradient of ``x -> rayleigh(H, x)``, i.e. ``k * A x^{k-1}``."""
    return H.k * adjacency_apply(H, x)


def _require_even_connected(H: Hypergraph) -> None:
    if H.k % 2:
        raise HypergraphError("minimum H-eigenvalue search requires even k")
    if H.m == 0 or not is_connected(H):
        raise HypergraphError("minimum H-eigenvalue search requires a connected hypergraph with edges")


class _BatchForm:
    """Rayleigh form and gradient evaluated for many vectors at once (rows)."""

    def __init__(self, H: Hypergraph):
        self.k = H.k
        self.E = H.edge_array
        m, k = self.E.shape
        scatter = np.zeros((m * k, H.n))
        scatter[np.arange(m * k), self.E.ravel()] = 1.0
        self.scatter = scatter

    def value(self, X: np.ndarray) -> np.ndarray:
        return self.k * np.prod(X[:, self.E], axis=2).sum(axis=1)

    def gradient(self, X: np.ndarray) -> np.ndarray:
        P = X[:, self.E]
        R, m, k = P.shape
        pre = np.ones_like(P)
        suf = np.ones_like(P)
        pre[:, :, 1:] = np.cumprod(P[:, :, :-1], axis=2)
        suf[:, :, :-1] = np.cumprod(P[:, :, :0:-1], axis=2)[:, :, ::-1]
        return self.k * ((pre * suf).reshape(R, m * k) @ self.scatter)

    def normalize(self, X: np.ndarray) -> np.ndarray:
        scale = np.abs(X).max(axis=1, keepdims=True)
        Y = X / scale
        return Y / (np.abs(Y) ** self.k).sum(axis=1, keepdims=True) ** (1.0 / self.k)


def _projected(G: np.ndarray, X: np.ndarray, k: int) -> np.ndarray:
    # remove the component along the constraint normal x^{[k-1]}
    W = X ** (k - 1)
    coef = (G * W).sum(axis=1, keepdims=True) / (W * W).sum(axis=1, keepdims=True)
    return G - coef * W


def _descend(form: _BatchForm, X: np.ndarray, tol: float, max_steps: int) -> tuple[np.ndarray, np.ndarray]:
    k = form.k
    X = form.normalize(X)
    F = form.value(X)
    active = np.ones(len(X), dtype=bool)
    for _ in range(max_steps):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        Xa = X[idx]
        Gp = _projected(form.gradient(Xa), Xa, k)
        gnorm2 = (Gp * Gp).sum(axis=1)
        done = np.sqrt(gnorm2) < tol
        t = np.full(len(idx), STEP0)
        pending = ~done
        newX = Xa.copy()
        newF = F[idx].copy()
        for _ in range(MAX_SHRINKS):
            if not pending.any():
                break
            p = np.flatnonzero(pending)
            cand = form.normalize(Xa[p] - t[p, None] * Gp[p])
            fc = form.value(cand)
            ok = fc <= F[idx[p]] - ARMIJO * t[p] * gnorm2[p]
            acc = p[ok]
            newX[acc] = cand[ok]
            newF[acc] = fc[ok]
            pending[acc] = False
            t[p[~ok]] *= SHRINK
        # rows whose line search never succeeded have stalled at roundoff level,
        # as have rows whose accepted decrease is within rounding of the value
        done |= pending
        done |= (F[idx] - newF) <= STALL * (1.0 + np.abs(newF))
        X[idx] = newX
        F[idx] = newF
        active[idx[done]] = False
    return X, F


def _seeds(H: Hypergraph, restarts: int, seed, rho: SpectralEnclosure, odd_seed: bool) -> np.ndarray:
    n = H.n
    perron = rho.x
    signs = np.where(np.arange(1, n + 1) % 2 == 1, -1.0, 1.0)
    fixed = [np.ones(n), signs * perron]
    ob = odd_bipartition(H) if odd_seed else None
    if ob is not None and ob.exists:
        flip = np.array([-1.0 if v in ob.v1 else 1.0 for v in range(1, n + 1)])
        fixed.append(flip * perron)
    rows = fixed[:restarts]
    rng = np.random.default_rng(seed)
    extra = restarts - len(rows)
    if extra > 0:
        R = rng.uniform(-1.0, 1.0, size=(extra, n))
        R[np.abs(R).max(axis=1) == 0.0, 0] = 1.0
        rows.extend(R)
    return np.array(rows, dtype=float)


def mu_estimate(
    H: Hypergraph,
    restarts: int = DEFAULT_RESTARTS,
    tol: float = DEFAULT_TOL,
    seed=0,
    max_steps: int = DEFAULT_MAX_STEPS,
    rho: SpectralEnclosure | None = None,
    odd_seed: bool = True,
) -> MuEstimate:
    """Best Rayleigh value over ``restarts`` descents on the unit k-sphere.

    Seeds are the all-ones vector, the Perron vector with alternating signs,
    the Perron vector flipped on an odd-bipartition class when one exists
    (disable with ``odd_seed=False``), then uniform random vectors.
    Descents stop once the projected gradient norm drops below ``tol`` or
    after ``max_steps`` steps. Ties between restarts go to the lower index.
    """
    _require_even_connected(H)
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if rho is None:
        rho = rho_enclose(H)
    form = _BatchForm(H)
    X, F = _descend(form, _seeds(H, restarts, seed, rho, odd_seed), tol, max_steps)
    best = int(np.argmin(F))
    x = k_norm_normalize(X[best], H.k)
    value = rayleigh(H, x)
    return MuEstimate(value, x, restarts, "projected-descent", eigen_residual(H, x, value))


def mu_odd_bipartite_exact(H: Hypergraph, rho: SpectralEnclosure | None = None, v1=None) -> MuEstimate:
    """mu = -rho for odd-bipartite even-k graphs; x is the Perron vector negated on V1."""
    _require_even_connected(H)
    if v1 is None:
        ob = odd_bipartition(H)
        if not ob.exists:
            raise HypergraphError("hypergraph is not odd-bipartite")
        v1 = ob.v1
    if rho is None:
        rho = rho_enclose(H)
    flip = np.array([-1.0 if v in v1 else 1.0 for v in range(1, H.n + 1)])
    x = flip * rho.x
    value = -rho.midpoint
    return MuEstimate(
        value, x, 0, "exact-odd-bipartite", eigen_residual(H, x, value),
        interval=(-rho.upper, -rho.lower),
    )


def sub_hypergraph(H: Hypergraph, vertices) -> Hypergraph:
    """Induced sub-hypergraph on ``vertices``, relabelled to 1..len(vertices)."""
    order = sorted(vertices)
    relabel = {v: i + 1 for i, v in enumerate(order)}
    keep = [e for e in H.edges if all(v in relabel for v in e)]
    return Hypergraph(H.k, len(order), tuple(tuple(relabel[v] for v in e) for e in keep))


def mu_estimate_components(H: Hypergraph, **kwargs) -> float:
    """Minimum of ``mu_estimate`` over the components of a possibly disconnected H.

    Isolated vertices contribute the value 0.
    """
    if H.k % 2:
        raise HypergraphError("minimum H-eigenvalue search requires even k")
    vals = []
    for comp in components(H):
        sub = sub_hypergraph(H, comp)
        vals.append(0.0 if sub.m == 0 else mu_estimate(sub, **kwargs).value)
    return min(vals)
