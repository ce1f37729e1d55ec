"""
Certifying the nonregularity gap
================================

For a connected nonregular k-graph the gap ``Delta - rho`` is bounded
below by rationals in n, m, Delta, the diameter and the edge connectivity.
A bound is certified when it holds against an exact upper bound for rho.
"""

# %%
import json

from hspec import Hypergraph, analyze
from hspec.bounds import bound_thm31_main

H = Hypergraph(3, 4, ((1, 2, 3), (1, 2, 4)))

# %%
# n = 4, m = 2, Delta = 2, so the surplus n Delta - k m is 2. Diameter 2.
print("main bound:", bound_thm31_main(4, 2, 3, 2, 2))

# %%
report = analyze(H)
d = report.to_dict()
print(json.dumps({key: d[key] for key in ("rho_upper", "rho_upper_certified", "bounds", "verdicts")}, indent=2))

# %%
# The slack is how far the certified gap clears each bound.
for name, s in report.slack.items():
    print(f"{name:12s} {s:.6f}")
