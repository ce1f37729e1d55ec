"""Batch verification over enumerated or randomly generated instances."""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import FAILED, NOT_APPLICABLE, analyze
from .hypergraph import Hypergraph, enumerate_connected, gen_random_connected
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL

__all__ = [
    "BOUND_FAMILIES",
    "CampaignConfig",
    "iter_instances",
    "run_campaign",
    "summarize",
    "report_row",
    "render_json",
    "render_csv",
    "worker_count",
]

BOUND_FAMILIES = ("thm31_main", "thm31_k5f", "thm31_k4f", "eq11", "cor32", "thm33", "alon_sudakov")


@dataclass(frozen=True)
class CampaignConfig:
    mode: str = "random"  # "enumerate" | "random"
    n_values: tuple[int, ...] = (5, 6, 7, 8)
    k_values: tuple[int, ...] = (3, 4, 5)
    count: int = 200
    seed: int = 42
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    restarts: int = 64
    with_mu: bool = True

    def __post_init__(self):
        if self.mode not in ("enumerate", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.n_values or not self.k_values:
            raise ValueError("n and k ranges must be nonempty")
        if self.count < 0:
            raise ValueError("count must be >= 0")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


def iter_instances(cfg: CampaignConfig) -> Iterator[tuple[str, Hypergraph]]:
    """(instance id, hypergraph) pairs in a fixed order."""
    for k in cfg.k_values:
        for n in cfg.n_values:
            if k > n:
                continue
            if cfg.mode == "enumerate":
                for i, H in enumerate(enumerate_connected(n, k)):
                    yield f"enum-k{k}-n{n}-{i:06d}", H
            else:
                for i in range(cfg.count):
                    yield f"rand-k{k}-n{n}-{i:06d}", gen_random_connected(n, k, f"{cfg.seed}:{k}:{n}:{i}")


def _run_one(args) -> dict:
    ident, H, cfg = args
    report = analyze(
        H, tol=cfg.tol, max_iter=cfg.max_iter, restarts=cfg.restarts,
        seed=cfg.seed, with_mu=cfg.with_mu,
    )
    return {"id": ident, **report.to_dict()}


def worker_count() -> int:
    cap = os.environ.get("HSPEC_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def run_campaign(cfg: CampaignConfig, workers: int | None = None) -> list[dict]:
    """Analyze every instance; rows come back in instance order regardless of workers."""
    jobs = [(ident, H, cfg) for ident, H in iter_instances(cfg)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) < 2:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs, chunksize=16))


def summarize(rows: list[dict]) -> dict:
    """Verdict counts per bound family and minimum slack per family."""
    per_family: dict[str, Counter] = {}
    totals: Counter = Counter()
    min_slack: dict[str, float] = {}
    failures = []
    for row in rows:
        for name, verdict in row["verdicts"].items():
            per_family.setdefault(name, Counter())[verdict] += 1
            totals[verdict] += 1
        for name, s in row["slack"].items():
            if name not in min_slack or s < min_slack[name]:
                min_slack[name] = s
        if FAILED in row["verdicts"].values():
            failures.append(row["id"])
    return {
        "instances": len(rows),
        "verdicts": dict(sorted(totals.items())),
        "per_family": {name: dict(sorted(c.items())) for name, c in sorted(per_family.items())},
        "min_slack": dict(sorted(min_slack.items())),
        "failed": failures,
    }


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


_CSV_BASE = (
    "id", "n", "m", "k", "delta", "diameter", "edge_connectivity", "regular",
    "odd_bipartite", "rho_lower", "rho_upper", "mu_estimate",
)


def report_row(row: dict) -> dict:
    """Flatten a report dict: one bound/float/verdict column triple per family."""
    flat = {key: row.get(key) for key in _CSV_BASE}
    for name in BOUND_FAMILIES:
        q = row["bounds"].get(name)
        flat[name] = q
        if q is None:
            flat[f"{name}_float"] = None
        else:
            num, den = (int(p) for p in q.split("/"))
            flat[f"{name}_float"] = num / den
        flat[f"{name}_verdict"] = row["verdicts"].get(name, NOT_APPLICABLE)
    return flat


def render_csv(rows: list[dict]) -> str:
    fields = list(_CSV_BASE)
    for name in BOUND_FAMILIES:
        fields += [name, f"{name}_float", f"{name}_verdict"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: ("" if v is None else v) for key, v in report_row(row).items()})
    return buf.getvalue()

