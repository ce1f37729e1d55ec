"""Action of the hypergraph adjacency tensor on vectors.

The order-k tensor has entry ``1/(k-1)!`` at every ordering of an edge. Summing
over the ``(k-1)!`` orderings of the remaining indices cancels that factor, so

    (A x^{k-1})_i = sum over edges e containing i of prod_{j in e, j != i} x_j.

The tensor is never materialized; every routine walks the ``(m, k)`` edge array.
"""

from __future__ import annotations

import numpy as np

from .hypergraph import Hypergraph

__all__ = [
    "adjacency_apply",
    "rayleigh",
    "k_norm",
    "k_norm_normalize",
    "componentwise_power",
    "eigen_residual",
]


def _as_vector(H: Hypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != H.n:
        raise ValueError(f"vector of shape {x.shape} does not match n={H.n}")
    return x


def _excluded_products(X: np.ndarray) -> np.ndarray:
    """``out[e, j]`` is the product of row ``e`` of X with column j left out.

    Prefix and suffix running products, so zeros never need a division.
    """
    m, k = X.shape
    pre = np.ones((m, k))
    suf = np.ones((m, k))
    if k > 1:
        pre[:, 1:] = np.cumprod(X[:, :-1], axis=1)
        suf[:, :-1] = np.cumprod(X[:, :0:-1], axis=1)[:, ::-1]
    return pre * suf


def adjacency_apply(H: Hypergraph, x) -> np.ndarray:
    """Return ``A x^{k-1}`` as a length-n vector."""
    x = _as_vector(H, x)
    if H.m == 0:
        return np.zeros(H.n)
    E = H.edge_array
    if H.k == 2:
        contrib = x[E[:, ::-1]]
    else:
        contrib = _excluded_products(x[E])
    return np.bincount(E.ravel(), weights=contrib.ravel(), minlength=H.n)


def rayleigh(H: Hypergraph, x) -> float:
    """``k * sum_e prod_{j in e} x_j``, which equals ``x . (A x^{k-1})``."""
    x = _as_vector(H, x)
    if H.m == 0:
        return 0.0
    return float(H.k * np.prod(x[H.edge_array], axis=1).sum())


def k_norm(x, k: int) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.sum(np.abs(x) ** k) ** (1.0 / k))


def k_norm_normalize(x, k: int) -> np.ndarray:
    """Scale x so that ``sum |x_i|^k == 1``; signs are kept."""
    x = np.asarray(x, dtype=float)
    scale = np.max(np.abs(x)) if x.size else 0.0
    if scale == 0.0:
        raise ValueError("cannot normalize the zero vector")
    # pre-scale by the max entry so large or tiny inputs do not over/underflow
    y = x / scale
    return y / np.sum(np.abs(y) ** k) ** (1.0 / k)


def componentwise_power(x, alpha: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if float(alpha) != int(alpha) and np.any(x < 0):
        raise ValueError("fractional power of a negative entry")
    return x ** alpha


def eigen_residual(H: Hypergraph, x, lam: float) -> float:
    """``max_i |(A x^{k-1})_i - lam * x_i^{k-1}|``."""
    x = _as_vector(H, x)
    if H.n == 0:
        return 0.0
    return float(np.max(np.abs(adjacency_apply(H, x) - lam * x ** (H.k - 1))))
