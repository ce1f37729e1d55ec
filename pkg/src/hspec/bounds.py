"""Exact evaluation and certified checking of the nonregularity gap bounds.

All bound formulas take integer graph invariants and return ``Fraction``.
A strict claim ``Delta - rho > B`` is *certified* when it holds with rho
replaced by an exact rational upper bound for rho, i.e. the largest
generalized Rayleigh ratio at the computed positive iterate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .hypergraph import (
    Hypergraph,
    HyperPath,
    HypergraphError,
    degree_profile,
    diameter,
    is_connected,
    shortest_path,
    to_khg,
)
from .mu import MuEstimate, mu_estimate, mu_odd_bipartite_exact
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, SpectralEnclosure, exact_ratio_bounds, rho_enclose
from .structure import edge_connectivity, odd_bipartition

__all__ = [
    "CERTIFIED",
    "WITHIN_TOL",
    "NOT_APPLICABLE",
    "FAILED",
    "BoundReport",
    "bound_thm31_main",
    "bound_thm31_k5f",
    "bound_thm31_k4f",
    "bound_cor32",
    "bound_eq11",
    "bound_alon_sudakov",
    "lemma21_gap",
    "lemma22_check",
    "ineq31_rhs",
    "ineq31_check",
    "ineq32_sides",
    "ineq32_check",
    "verify_theorem31",
    "verify_corollary32",
    "verify_theorem33",
    "analyze",
    "format_fraction",
]

CERTIFIED = "certified-true"
WITHIN_TOL = "true-within-tolerance"
NOT_APPLICABLE = "not-applicable"
FAILED = "FAILED"

_GAP_BOUNDS = ("thm31_main", "thm31_k5f", "thm31_k4f", "cor32", "eq11")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# bound formulas


def _surplus(n: int, m: int, k: int, delta: int) -> int:
    t = n * delta - k * m
    if t < 1:
        raise ValueError(f"degree surplus n*Delta - k*m = {t} must be >= 1")
    return t


def bound_thm31_main(n: int, m: int, k: int, delta: int, D: int) -> Fraction:
    """``k t / (n (2 (k-1) D t + k))`` with surplus ``t = n Delta - k m``."""
    if k < 2 or n < k:
        raise ValueError("need n >= k >= 2")
    if D < 1:
        raise ValueError("diameter must be positive")
    t = _surplus(n, m, k, delta)
    return Fraction(k * t, n * (2 * (k - 1) * D * t + k))


def bound_thm31_k5f(n: int, m: int, k: int, delta: int, f: int) -> Fraction:
    """Variant for f-edge-connected k-graphs with k >= 5."""
    if k < 5:
        raise ValueError("this bound needs k >= 5")
    if f < 1:
        raise ValueError("edge connectivity must be >= 1")
    t = _surplus(n, m, k, delta)
    return Fraction(f * k * t, n * (2 * (k - 1) * t + f * k))


def bound_thm31_k4f(n: int, m: int, delta: int, f: int) -> Fraction:
    """Variant for f-edge-connected 4-graphs."""
    if f < 1:
        raise ValueError("edge connectivity must be >= 1")
    t = _surplus(n, m, 4, delta)
    return Fraction(f * t, n * (2 * t + f))


def bound_cor32(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(1, 3 * n)


def bound_eq11(n: int, m: int, delta: int, D: int) -> Fraction:
    """The graph (k = 2) bound ``t / (n (D t + 1))``."""
    if D < 1:
        raise ValueError("diameter must be positive")
    t = _surplus(n, m, 2, delta)
    return Fraction(t, n * (D * t + 1))


def bound_alon_sudakov(n: int, D: int) -> Fraction:
    if n < 1 or D < 1:
        raise ValueError("need n >= 1 and D >= 1")
    return Fraction(1, n * (D + 1))


# --------------------------------------------------------------------------
# numeric lemma oracles


def lemma21_gap(a) -> tuple[float, float]:
    """(AM - GM, pairwise square-root spread) for nonnegative a, length >= 2."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise ValueError("need at least two numbers")
    if np.any(a < 0):
        raise ValueError("entries must be nonnegative")
    n = a.size
    geo = 0.0 if np.any(a == 0) else float(np.exp(np.mean(np.log(a))))
    lhs = float(a.mean()) - geo
    s = np.sqrt(a)
    diff = s[:, None] - s[None, :]
    rhs = float(np.sum(np.triu(diff * diff, 1))) / (n * (n - 1))
    return lhs, rhs


def lemma22_check(a: float, b: float, y1: float, y2: float) -> tuple[float, float]:
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    lhs = a * (y1 - y2) ** 2 + b * y2**2
    rhs = a * b / (a + b) * y1**2
    return lhs, rhs


# --------------------------------------------------------------------------
# proof-inequality diagnostics on a computed Perron vector


def _pair_spread(x: np.ndarray, k: int, edges) -> float:
    """Sum over edges of sum over vertex pairs i < j of (x_i^{k/2} - x_j^{k/2})^2."""
    h = x ** (k / 2.0)
    total = 0.0
    for e in edges:
        vals = h[np.asarray(e) - 1]
        d = vals[:, None] - vals[None, :]
        total += float(np.sum(np.triu(d * d, 1)))
    return total


def ineq31_rhs(H: Hypergraph, x) -> float:
    """``(n Delta - k m) x_min^k + (1/(k-1)) * pair spread over all edges``."""
    x = np.asarray(x, dtype=float)
    prof = degree_profile(H)
    t = H.n * prof.delta_max - H.k * H.m
    return t * float(x.min()) ** H.k + _pair_spread(x, H.k, H.edges) / (H.k - 1)


def ineq31_check(H: Hypergraph, enclosure: SpectralEnclosure, tol: float = DEFAULT_TOL) -> bool:
    """``Delta - rho_upper > rhs - 10 tol`` at the enclosure's Perron approximation."""
    prof = degree_profile(H)
    if prof.delta_min == prof.delta_max:
        raise HypergraphError("inequality needs a nonregular hypergraph")
    if np.any(enclosure.x <= 0):
        raise ValueError("Perron approximation must be positive")
    return prof.delta_max - enclosure.upper > ineq31_rhs(H, enclosure.x) - 10 * tol


def _r_free_constant(k: int) -> float:
    if k >= 5:
        return k / 2.0
    if k == 4:
        return 1.5
    raise ValueError("the path-length-free constant applies only to k >= 4")


def ineq32_sides(H: Hypergraph, x, P: HyperPath, form: str = "path") -> tuple[float, float]:
    """Both sides of the path spread inequality.

    ``form="path"`` uses the constant ``k/(2r)``; ``form="r_free"`` uses
    ``k/2`` for k >= 5 and ``3/2`` for k = 4.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("x must be positive")
    if P.length < 1 or not P.is_valid(H):
        raise HypergraphError("invalid path")
    k = H.k
    if form == "path":
        c = k / (2.0 * P.length)
    elif form == "r_free":
        c = _r_free_constant(k)
    else:
        raise ValueError(f"unknown form {form!r}")
    lhs = _pair_spread(x, k, P.edges)
    gap = x[P.start - 1] ** (k / 2.0) - x[P.end - 1] ** (k / 2.0)
    return lhs, c * gap * gap


def ineq32_check(H: Hypergraph, x, P: HyperPath, form: str = "path") -> bool:
    lhs, rhs = ineq32_sides(H, x, P, form)
    return lhs >= rhs - 1e-12


# --------------------------------------------------------------------------
# reports


@dataclass
class BoundReport:
    n: int
    m: int
    k: int
    delta: int
    diameter: int | None
    edge_connectivity: int | None
    regular: bool
    odd_bipartite: bool | None
    connected: bool
    rho: SpectralEnclosure | None = None
    rho_upper_exact: Fraction | None = None
    mu: MuEstimate | None = None
    bounds: dict[str, Fraction] = field(default_factory=dict)
    verdicts: dict[str, str] = field(default_factory=dict)
    slack: dict[str, float] = field(default_factory=dict)
    diagnostics: dict[str, bool | None] = field(default_factory=dict)
    witness: str | None = None

    @property
    def failed(self) -> bool:
        return FAILED in self.verdicts.values()

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "delta": self.delta,
            "diameter": self.diameter,
            "edge_connectivity": self.edge_connectivity,
            "regular": self.regular,
            "odd_bipartite": self.odd_bipartite,
            "connected": self.connected,
            "rho_lower": None if self.rho is None else self.rho.lower,
            "rho_upper": None if self.rho is None else self.rho.upper,
            "rho_upper_certified": (
                None if self.rho_upper_exact is None
                else float(np.nextafter(float(self.rho_upper_exact), np.inf))
            ),
            "rho_iterations": None if self.rho is None else self.rho.iterations,
            "mu_estimate": None if self.mu is None else self.mu.value,
            "mu_method": None if self.mu is None else self.mu.method,
            "mu_residual": None if self.mu is None else self.mu.residual,
            "bounds": {name: format_fraction(q) for name, q in self.bounds.items()},
            "verdicts": dict(self.verdicts),
            "slack": dict(self.slack),
            "diagnostics": dict(self.diagnostics),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _base_report(H: Hypergraph) -> BoundReport:
    prof = degree_profile(H)
    connected = H.n >= 1 and is_connected(H)
    return BoundReport(
        n=H.n,
        m=H.m,
        k=H.k,
        delta=prof.delta_max,
        diameter=diameter(H) if connected else None,
        edge_connectivity=edge_connectivity(H).f if connected and H.n >= 2 else None,
        regular=prof.delta_min == prof.delta_max,
        odd_bipartite=odd_bipartition(H).exists if H.m else None,
        connected=connected,
    )


def _judge_gap(report: BoundReport, name: str, bound: Fraction) -> None:
    """Record verdict and slack for the claim ``Delta - rho > bound``."""
    report.bounds[name] = bound
    gap_cert = report.delta - report.rho_upper_exact
    report.slack[name] = float(gap_cert - bound)
    if gap_cert > bound:
        report.verdicts[name] = CERTIFIED
    else:
        # refuted, or unresolvable at the enclosure width; both are reported
        report.verdicts[name] = FAILED


def _spectral(report: BoundReport, H: Hypergraph, tol: float, max_iter: int) -> None:
    report.rho = rho_enclose(H, tol=tol, max_iter=max_iter)
    report.rho_upper_exact = exact_ratio_bounds(H, report.rho.x)[1]


def _theorem31_into(report: BoundReport, H: Hypergraph, tol: float) -> None:
    n, m, k, delta = H.n, H.m, H.k, report.delta
    D, f = report.diameter, report.edge_connectivity
    _judge_gap(report, "thm31_main", bound_thm31_main(n, m, k, delta, D))
    if k >= 5:
        _judge_gap(report, "thm31_k5f", bound_thm31_k5f(n, m, k, delta, f))
    else:
        report.verdicts["thm31_k5f"] = NOT_APPLICABLE
    if k == 4:
        _judge_gap(report, "thm31_k4f", bound_thm31_k4f(n, m, delta, f))
    else:
        report.verdicts["thm31_k4f"] = NOT_APPLICABLE
    if k == 2:
        _judge_gap(report, "eq11", bound_eq11(n, m, delta, D))
    else:
        report.verdicts["eq11"] = NOT_APPLICABLE
    report.diagnostics.update(_diagnostics(H, report.rho, tol))


def _diagnostics(H: Hypergraph, enc: SpectralEnclosure, tol: float) -> dict[str, bool | None]:
    x = enc.x
    u = int(np.argmax(x)) + 1
    v = int(np.argmin(x)) + 1
    P = shortest_path(H, u, v)
    return {
        "ineq31": bool(ineq31_check(H, enc, tol)),
        "ineq32": bool(ineq32_check(H, x, P)),
        "ineq32_r_free": bool(ineq32_check(H, x, P, form="r_free")) if H.k >= 4 else None,
    }


def _fail_witness(report: BoundReport, H: Hypergraph) -> BoundReport:
    if report.failed:
        report.witness = to_khg(H)
    return report


def verify_theorem31(H: Hypergraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> BoundReport:
    """Certify every applicable gap bound for a connected nonregular k-graph.

    Regular, edgeless or disconnected inputs produce a report whose gap
    verdicts are all not-applicable.
    """
    report = _base_report(H)
    if not report.connected or H.m == 0 or report.regular:
        for name in ("thm31_main", "thm31_k5f", "thm31_k4f", "eq11"):
            report.verdicts[name] = NOT_APPLICABLE
        return report
    _spectral(report, H, tol, max_iter)
    _theorem31_into(report, H, tol)
    return _fail_witness(report, H)


def verify_corollary32(H: Hypergraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> str:
    if H.k < 4:
        raise HypergraphError("the 1/(3n) gap bound is stated for k >= 4")
    prof = degree_profile(H)
    if H.m == 0 or not is_connected(H) or prof.delta_min == prof.delta_max:
        return NOT_APPLICABLE
    enc = rho_enclose(H, tol=tol, max_iter=max_iter)
    _, hi = exact_ratio_bounds(H, enc.x)
    return CERTIFIED if prof.delta_max - hi > bound_cor32(H.n) else FAILED


def _theorem33_verdict(H: Hypergraph, delta: int, mu: MuEstimate) -> str:
    # mu.value >= mu, so a pass cannot be certified but a failure is a refutation
    return WITHIN_TOL if Fraction(delta) + Fraction(mu.value) > bound_cor32(H.n) else FAILED


def verify_theorem33(
    H: Hypergraph,
    restarts: int = 64,
    seed=0,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> str:
    """Non-falsification check of ``Delta + mu > 1/(3n)`` for even k >= 4."""
    if H.k % 2 or H.k < 4:
        raise HypergraphError("the minimum H-eigenvalue bound is stated for even k >= 4")
    if H.m == 0 or not is_connected(H) or odd_bipartition(H).exists:
        return NOT_APPLICABLE
    rho = rho_enclose(H, tol=tol, max_iter=max_iter)
    mu = mu_estimate(H, restarts=restarts, seed=seed, rho=rho)
    return _theorem33_verdict(H, degree_profile(H).delta_max, mu)


def analyze(
    H: Hypergraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    restarts: int = 64,
    seed=0,
    with_mu: bool = True,
) -> BoundReport:
    """Full report: rho, mu (even k), structure, and every applicable verdict.

    With ``with_mu=False`` the mu search is skipped and the mu-dependent
    claims are left out of ``verdicts`` entirely.
    """
    report = _base_report(H)
    names = ("thm31_main", "thm31_k5f", "thm31_k4f", "eq11", "cor32", "thm33", "alon_sudakov")
    if not with_mu:
        names = names[:5]
    if not report.connected or H.m == 0:
        report.verdicts.update({name: NOT_APPLICABLE for name in names})
        return report
    _spectral(report, H, tol, max_iter)
    if H.k % 2 == 0 and with_mu:
        if report.odd_bipartite:
            report.mu = mu_odd_bipartite_exact(H, rho=report.rho)
        else:
            report.mu = mu_estimate(H, restarts=restarts, seed=seed, rho=report.rho)

    if report.regular:
        report.verdicts.update({name: NOT_APPLICABLE for name in _GAP_BOUNDS})
    else:
        _theorem31_into(report, H, tol)
        if H.k >= 4:
            _judge_gap(report, "cor32", bound_cor32(H.n))
        else:
            report.verdicts["cor32"] = NOT_APPLICABLE

    if not with_mu:
        return _fail_witness(report, H)
    if H.k % 2 == 0 and H.k >= 4 and not report.odd_bipartite:
        report.bounds["thm33"] = bound_cor32(H.n)
        report.verdicts["thm33"] = _theorem33_verdict(H, report.delta, report.mu)
        report.slack["thm33"] = report.delta + report.mu.value - float(bound_cor32(H.n))
    else:
        report.verdicts["thm33"] = NOT_APPLICABLE

    if H.k == 2 and not report.odd_bipartite:
        # reference bound for nonbipartite graphs; mu is an upper estimate
        b = bound_alon_sudakov(H.n, report.diameter)
        report.bounds["alon_sudakov"] = b
        ok = Fraction(report.delta) + Fraction(report.mu.value) >= b
        report.verdicts["alon_sudakov"] = WITHIN_TOL if ok else FAILED
        report.slack["alon_sudakov"] = report.delta + report.mu.value - float(b)
    else:
        report.verdicts["alon_sudakov"] = NOT_APPLICABLE
    return _fail_witness(report, H)

