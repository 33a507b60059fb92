"""All replacement distances between one source and one target.

Cutting path edge ``j`` splits the BFS tree of ``s`` into the part hanging off
``v_0..v_j`` and the subtree below ``v_{j+1}``.  A detour must use some non-path
edge ``(x, y)`` from the first part into the second, and the best one costs
``dist(s, x) + 1 + dist(y, t)``.  Label every vertex with the index of its
deepest ancestor on the path; an edge with labels ``a < b`` then serves exactly
the cuts ``a..b-1``, and the answer is a range-minimum "painting" problem.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import INF, Graph, ShortestPathTree, bfs_distances, bfs_tree


@dataclass(frozen=True)
class PairReplacement:
    s: int
    t: int
    path: np.ndarray  # vertices v_0 = s .. v_L = t
    dist: np.ndarray  # dist[j] = replacement distance avoiding (v_j, v_{j+1})

    @property
    def entries(self) -> list[tuple[tuple[int, int], int]]:
        p = self.path.tolist()
        return [((p[j], p[j + 1]), int(d)) for j, d in enumerate(self.dist.tolist())]


def path_labels(tree: ShortestPathTree, path: np.ndarray) -> np.ndarray:
    """For each vertex, the index of its deepest ancestor among ``path``; -1 if unreachable."""
    idx = tree.lca_index
    n = tree.n
    diff = np.zeros(n + 1, dtype=np.int64)
    inner = path[1:]
    np.add.at(diff, idx.tin[inner], 1)
    np.add.at(diff, idx.tout[inner] + 1, -1)
    by_pos = np.cumsum(diff[:n])
    labels = np.full(n, -1, dtype=np.int64)
    reach = tree.bfs_order
    labels[reach] = by_pos[idx.tin[reach]]
    return labels


def range_min_paint(length: int, lo: np.ndarray, hi: np.ndarray, val: np.ndarray) -> np.ndarray:
    """``out[j] = min(val[i] : lo[i] <= j <= hi[i])``, INF where uncovered."""
    out = np.full(length, INF, dtype=np.int64)
    if length == 0 or lo.size == 0:
        return out
    levels = max(1, length.bit_length())
    table = np.full((levels, length), INF, dtype=np.int64)
    k = np.floor(np.log2(hi - lo + 1)).astype(np.int64)
    # guard against float rounding at powers of two
    k = np.where((1 << (k + 1)) <= hi - lo + 1, k + 1, k)
    k = np.where((1 << k) > hi - lo + 1, k - 1, k)
    flat = table.reshape(-1)
    np.minimum.at(flat, k * length + lo, val)
    np.minimum.at(flat, k * length + hi - (1 << k) + 1, val)
    for lvl in range(levels - 1, 0, -1):
        half = 1 << (lvl - 1)
        top = table[lvl]
        below = table[lvl - 1]
        np.minimum(below, top, out=below)
        np.minimum(below[half:], top[: length - half], out=below[half:])
    return table[0].copy()


def replacement_along_path(
    g: Graph, tree: ShortestPathTree, dist_to_t: np.ndarray, path: np.ndarray
) -> np.ndarray:
    """Replacement distances for every edge of ``path`` (a root-to-target tree path)."""
    length = len(path) - 1
    if length <= 0:
        return np.empty(0, dtype=np.int64)
    labels = path_labels(tree, path)
    u, v = g.edges[:, 0], g.edges[:, 1]
    lu, lv = labels[u], labels[v]
    ok = (lu >= 0) & (lv >= 0) & (lu != lv)
    x = np.where(lu < lv, u, v)[ok]
    y = np.where(lu < lv, v, u)[ok]
    lo = np.minimum(lu, lv)[ok]
    hi = np.maximum(lu, lv)[ok] - 1
    # the path edges themselves are the only tree edges that cross a cut
    on_path = (hi == lo) & (tree.parent[y] == x) & (labels[y] == lo + 1) & (path[lo + 1] == y)
    keep = ~on_path
    val = tree.dist[x[keep]] + 1 + dist_to_t[y[keep]]
    val = np.minimum(val, INF)
    return range_min_paint(length, lo[keep], hi[keep], val)


def pair_replacement_paths(g: Graph, s: int, t: int, tree: ShortestPathTree | None = None) -> PairReplacement:
    tree = tree if tree is not None else bfs_tree(g, s)
    if not tree.reachable(t):
        raise ValueError(f"target {t} unreachable from {s}")
    path = np.asarray(tree.path_vertices(t), dtype=np.int64)
    dist_to_t = bfs_distances(g, t)
    return PairReplacement(s=s, t=t, path=path, dist=replacement_along_path(g, tree, dist_to_t, path))
