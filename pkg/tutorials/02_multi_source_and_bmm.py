"""Several sources at once, the lookup index, and Boolean products.

Run with ``python3 tutorials/02_multi_source_and_bmm.py``.
"""
import numpy as np

from replpath import AlgoConfig, Counters, QueryIndex, boolean_multiply, run_msrp, run_ssrp, verify_table
from replpath.generators import erdos_renyi

# Large enough that centers and landmarks are a proper sample.
g = erdos_renyi(200, 0.03, seed=2)
sources = [0, 70, 140]
cfg = AlgoConfig(seed=9)

# keep_state exposes the sampled centers and landmarks and the per-source passes
counters = Counters()
table, state = run_msrp(g, sources, cfg, counters, keep_state=True)
print("centers:", state.centers.centers.size, "of", g.n)
print("landmarks:", state.landmarks.union.size, "of", g.n)
print("work:", counters.as_dict())
print("exact:", verify_table(g, sources, table, cfg).ok)

# Intervals of one source -> landmark path, cut at centers.
s = sources[0]
bn = state.bottlenecks[s]
r, dec = max(bn.decomposition.items(), key=lambda kv: len(kv[1].path))
print(f"path {s} -> {r}:", dec.path.tolist(), "cuts at", dec.cuts)

# Queries: an edge off the canonical path leaves the distance unchanged.
index = QueryIndex(g, table)
t = int(table.tree(s).bfs_order[-1])
path = table.tree(s).path_vertices(t)
print(f"d({s}, {t}) = {index.distance(s, t)}; failing {path[0], path[1]} gives {index.query(s, t, (path[0], path[1]))}")

# One source is the single-source algorithm exactly.
assert run_msrp(g, [5], cfg) == run_ssrp(g, 5, cfg)

# Boolean matrix product read off replacement distances.
rng = np.random.default_rng(0)
A = rng.random((6, 6)) < 0.3
B = rng.random((6, 6)) < 0.3
C = boolean_multiply(A, B, sigma=2)
print("product matches:", np.array_equal(C, (A.astype(int) @ B.astype(int)) > 0))
