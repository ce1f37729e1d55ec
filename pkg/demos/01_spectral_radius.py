"""
Spectral radius of a uniform hypergraph
=======================================

Build a small 3-graph, apply its adjacency tensor, and enclose the
spectral radius between two Collatz-Wielandt ratios.
"""

# %%
# A 3-graph is a vertex count plus a list of 3-element edges.
import numpy as np

from hspec import Hypergraph, adjacency_apply, rayleigh, rho_enclose
from hspec.spectral import exact_ratio_bounds

H = Hypergraph(3, 5, ((1, 2, 3), (1, 2, 4), (3, 4, 5)))
print(H)
print("degrees:", H.degrees)

# %%
# The tensor is never materialized. Entry i of A x^{k-1} sums, over edges
# through i, the product of the other members' values.
x = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
print("A x^2 =", adjacency_apply(H, x))
print("x . A x^2 =", rayleigh(H, x))

# %%
# Shifted power iteration. Every step gives a rigorous interval, and the
# running intersection shrinks until its width is below ``tol``.
enc = rho_enclose(H, tol=1e-12)
print(f"rho in [{enc.lower:.15f}, {enc.upper:.15f}] after {enc.iterations} steps")
print("Perron vector:", np.round(enc.x, 6))

# %%
# The same bounds in exact rational arithmetic at the final iterate.
lo, hi = exact_ratio_bounds(H, enc.x)
print("exact upper bound:", hi, "=", float(hi))

# %%
# A regular hypergraph has rho equal to its degree.
K = Hypergraph(3, 4, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)))
print("complete 3-graph on 4 vertices:", rho_enclose(K).midpoint)
