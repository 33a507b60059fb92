"""Single-source replacement paths.

Path edges are split by how far they sit from the target.  Far edges are
answered through a sampled landmark that the detour must pass near the target;
near edges are answered twice, once by a Dijkstra over an auxiliary graph that
captures every short detour and once through the level-0 landmarks for long
detours.  All passes lower entries of a shared table by ``min``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .auxgraph import AuxGraph
from .graph import INF, Graph, ShortestPathTree, bfs_tree, tree_child
from .pair_rp import replacement_along_path
from .sampling import AlgoConfig, LandmarkSets, Scale, sample_landmarks
from .table import Counters, ReplacementTable


@dataclass(frozen=True)
class EdgeClass:
    near: bool
    k: int = 0

    def __str__(self) -> str:
        return "near" if self.near else f"far({self.k})"


def classify_distance(d: int, scale: Scale) -> EdgeClass:
    if d < scale.near:
        return EdgeClass(near=True)
    return EdgeClass(near=False, k=scale.far_level(d))


def classify_edge(
    t_s: ShortestPathTree, target: int, e: Sequence[int], cfg: AlgoConfig, sigma: int = 1
) -> EdgeClass:
    """Class of path edge ``e`` by its hop distance to ``target`` (measured from the deeper end)."""
    b = tree_child(t_s, e)
    if b < 0 or not t_s.reachable(target) or not t_s.lca_index.is_ancestor(b, target):
        raise ValueError(f"edge {tuple(e)} is not on the path {t_s.root} -> {target}")
    d = int(t_s.dist[target] - t_s.dist[b])
    return classify_distance(d, Scale.of(t_s.n, sigma, cfg))


def near_count(scale: Scale, n: int) -> int:
    """Number of distinct near offsets ``0..near_count-1`` (offsets are integers below ``near``)."""
    return int(min(np.ceil(scale.near), n))


class LandmarkTrees:
    """BFS trees of a vertex set stacked into ``(len(roots), n)`` arrays."""

    def __init__(self, g: Graph, roots: Iterable[int], known: dict[int, ShortestPathTree] | None = None):
        self.roots = np.asarray(sorted(set(int(r) for r in roots)), dtype=np.int64)
        known = known or {}
        self.trees = [known[r] if r in known else bfs_tree(g, r) for r in self.roots.tolist()]
        self.pos = {r: i for i, r in enumerate(self.roots.tolist())}
        n = g.n
        k = len(self.trees)
        self.dist = np.empty((k, n), dtype=np.int64)
        self.parent = np.empty((k, n), dtype=np.int64)
        self.tin = np.empty((k, n), dtype=np.int64)
        self.tout = np.empty((k, n), dtype=np.int64)
        for i, t in enumerate(self.trees):
            idx = t.lca_index
            self.dist[i] = t.dist
            self.parent[i] = t.parent
            self.tin[i] = idx.tin
            self.tout[i] = idx.tout

    def edge_on_paths(self, rows: np.ndarray, a: np.ndarray, b: np.ndarray, targets) -> np.ndarray:
        """``out[i, j]``: does edge ``(a[i], b[i])`` lie on the tree path ``roots[rows[j]] -> target``?

        ``targets`` is one vertex or one per edge.
        """
        r = rows[None, :]
        tgt = np.broadcast_to(np.asarray(targets, dtype=np.int64), a.shape)[:, None]
        aa, bb = a[:, None], b[:, None]
        tin_t = self.tin[r, tgt]
        on_b = (self.parent[r, bb] == aa) & (self.tin[r, bb] <= tin_t) & (tin_t <= self.tout[r, bb])
        on_a = (self.parent[r, aa] == bb) & (self.tin[r, aa] <= tin_t) & (tin_t <= self.tout[r, aa])
        return on_b | on_a


def single_source_landmark_rp(g: Graph, s_tree: ShortestPathTree, lt: LandmarkTrees) -> np.ndarray:
    """``M[b, j]``: distance from the source to landmark ``j`` avoiding the tree edge above ``b``.

    Where that edge is off the canonical path the plain distance is stored.
    """
    n = g.n
    base = s_tree.dist[lt.roots]
    out = np.broadcast_to(base, (n, len(lt.roots))).copy()
    for j, r in enumerate(lt.roots.tolist()):
        if r == s_tree.root or not s_tree.reachable(r):
            continue
        path = np.asarray(s_tree.path_vertices(r), dtype=np.int64)
        out[path[1:], j] = replacement_along_path(g, s_tree, lt.dist[j], path)
    return out


def _level_positions(lt: LandmarkTrees, members: np.ndarray) -> np.ndarray:
    return np.asarray([lt.pos[r] for r in members.tolist()], dtype=np.int64)


def far_edge_pass(
    g: Graph,
    s_tree: ShortestPathTree,
    targets: Iterable[int],
    landmarks: LandmarkSets,
    lt: LandmarkTrees,
    landmark_rp: np.ndarray,
    table: ReplacementTable,
    scale: Scale,
    counters: Counters | None = None,
) -> None:
    """For a level-``k`` far edge try every ``r`` in ``L_k`` within ``2^k X`` of the target."""
    counters = counters if counters is not None else Counters()
    s = s_tree.root
    levels = [_level_positions(lt, landmarks.level(k)) for k in range(landmarks.k_max + 1)]
    for t in targets:
        if t == s or not s_tree.reachable(t):
            continue
        children = s_tree.path_children(t)
        d = len(children) - 1 - np.arange(len(children))
        far = d >= scale.near
        if not far.any():
            continue
        ks = scale.far_levels(d[far])
        far_pos = np.flatnonzero(far)
        work = 0
        for k in np.unique(ks).tolist():
            pos = far_pos[ks == k]
            rk = levels[min(k, len(levels) - 1)]
            work += len(pos) * len(rk)
            if rk.size == 0:
                continue
            drt = lt.dist[rk, t]
            ok = drt <= (2 ** k) * scale.x
            if not ok.any():
                continue
            rk, drt = rk[ok], drt[ok]
            cand = landmark_rp[np.ix_(children[pos], rk)] + drt[None, :]
            table.merge_at(s, t, pos, np.minimum(cand.min(axis=1), INF))
        counters.far_work += work
        counters.far_work_by_target[t] = counters.far_work_by_target.get(t, 0) + work


@dataclass
class SmallNearState:
    """Dijkstra result over the short-detour auxiliary graph of one source.

    Node 0 is ``[s]``, node ``v + 1`` is ``[v]`` and ``base[t] + d`` is
    ``[t, e]`` for the path edge ``e`` whose deeper end is ``d`` hops above ``t``.
    """

    tree: ShortestPathTree
    near_count: int
    base: np.ndarray
    count: np.ndarray
    dist: np.ndarray
    pred: np.ndarray
    _owner: np.ndarray | None = None

    def value(self, t: int, d: int) -> int:
        if not 0 <= d < self.count[t]:
            return INF
        return int(self.dist[self.base[t] + d])

    def values(self, t: np.ndarray, d: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`value`."""
        t = np.asarray(t, dtype=np.int64)
        d = np.asarray(d, dtype=np.int64)
        ok = (d >= 0) & (d < self.count[t])
        out = np.full(np.broadcast(t, d).shape, INF, dtype=np.int64)
        idx = np.where(ok, self.base[t] + np.where(ok, d, 0), 0)
        out[ok] = self.dist[idx][ok]
        return out

    def walk(self, t: int, d: int) -> list[int]:
        """Vertex sequence of the detour realising ``value(t, d)``."""
        if self.value(t, d) >= INF:
            raise ValueError("no small detour recorded")
        n = self.tree.n
        if self._owner is None:
            self._owner = np.repeat(np.arange(n), self.count)
        owner = self._owner
        node = int(self.base[t] + d)
        tail = []
        while node > n:
            tail.append(int(owner[node - n - 1]))
            node = int(self.pred[node])
        if node < 1:
            raise ValueError("corrupt predecessor chain")
        head = self.tree.path_vertices(node - 1)
        return head + tail[::-1]


def small_near_pass(
    g: Graph,
    s_tree: ShortestPathTree,
    scale: Scale,
    table: ReplacementTable | None = None,
    counters: Counters | None = None,
) -> SmallNearState:
    counters = counters if counters is not None else Counters()
    n = g.n
    s = s_tree.root
    dist = s_tree.dist
    parent = s_tree.parent
    idx = s_tree.lca_index
    tin, tout = idx.tin, idx.tout
    nt = near_count(scale, n)

    count = np.where(dist < INF, np.minimum(dist, nt), 0)
    count[s] = 0
    base = np.empty(n, dtype=np.int64)
    base[:] = 1 + n + np.concatenate([[0], np.cumsum(count)[:-1]])

    aux = AuxGraph()
    aux.block("[s]", 1)
    aux.block("[v]", n)
    aux.block("[t,e]", int(count.sum()))

    reach = s_tree.bfs_order
    aux.add_arcs(np.zeros(len(reach), dtype=np.int64), reach + 1, dist[reach])

    targets = reach[1:].tolist()
    near_children: dict[int, np.ndarray] = {}
    for t in targets:
        c = int(count[t])
        chain = np.empty(c, dtype=np.int64)
        v = t
        for i in range(c):
            chain[i] = v
            v = int(parent[v])
        near_children[t] = chain  # chain[d] is the deeper end of the edge d hops above t

        nb = g.neighbors(t)
        db = np.arange(c)
        anc = (tin[chain][None, :] <= tin[nb][:, None]) & (tin[nb][:, None] <= tout[chain][None, :])
        own = (chain[None, :] == t) & (nb[:, None] == parent[t])
        dst = np.broadcast_to(base[t] + db, anc.shape)
        plain = ~anc & ~own
        srcs = np.broadcast_to(nb[:, None] + 1, anc.shape)
        aux.add_arcs(srcs[plain], dst[plain], 1)
        offset = dist[nb][:, None] - dist[chain][None, :]
        carried = anc & ~own & (offset < nt)
        if carried.any():
            src_c = base[nb][:, None] + offset
            aux.add_arcs(src_c[carried], dst[carried], 1)

    aux.check_size(n * (2 + nt), (2 * g.m + n) * (nt + 2), "short-detour graph")
    counters.aux_nodes += aux.num_nodes
    counters.aux_arcs += aux.num_arcs
    adist, apred, pops = aux.dijkstra(0)
    counters.dijkstra_pops += pops

    state = SmallNearState(tree=s_tree, near_count=nt, base=base, count=count, dist=adist, pred=apred)
    if table is not None:
        for t in targets:
            c = int(count[t])
            if c == 0:
                continue
            d = np.arange(c)
            pos = int(dist[t]) - 1 - d
            table.merge_at(s, t, pos, adist[base[t] + d])
    return state


def large_near_pass(
    g: Graph,
    s_tree: ShortestPathTree,
    landmarks: LandmarkSets,
    lt: LandmarkTrees,
    landmark_rp: np.ndarray,
    table: ReplacementTable,
    scale: Scale,
    counters: Counters | None = None,
    targets: Iterable[int] | None = None,
) -> None:
    """Near edges via a level-0 landmark whose own path to the target avoids the edge."""
    counters = counters if counters is not None else Counters()
    s = s_tree.root
    nt = near_count(scale, g.n)
    r0 = _level_positions(lt, landmarks.level(0))
    if r0.size == 0:
        return
    parent = s_tree.parent
    lrp0 = landmark_rp[:, r0]
    for t in (targets if targets is not None else s_tree.bfs_order[1:].tolist()):
        if t == s or not s_tree.reachable(t):
            continue
        c = int(min(s_tree.dist[t], nt))
        children = s_tree.path_children(t)
        pos = np.arange(len(children) - c, len(children))
        b = children[pos]
        a = parent[b]
        blocked = lt.edge_on_paths(r0, a, b, np.asarray(t))
        cand = lrp0[b] + lt.dist[r0, t][None, :]
        cand = np.where(blocked, INF, cand)
        counters.near_scan_work += cand.size
        table.merge_at(s, t, pos, np.minimum(cand.min(axis=1), INF))


def run_ssrp(g: Graph, s: int, cfg: AlgoConfig | None = None, counters: Counters | None = None) -> ReplacementTable:
    cfg = cfg if cfg is not None else AlgoConfig()
    counters = counters if counters is not None else Counters()
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range")
    scale = Scale.of(g.n, 1, cfg)
    s_tree = bfs_tree(g, s)
    landmarks = sample_landmarks(g, [s], cfg)
    lt = LandmarkTrees(g, landmarks.union, known={s: s_tree})
    lrp = single_source_landmark_rp(g, s_tree, lt)

    table = ReplacementTable(g)
    table.add_source(s_tree)
    targets = s_tree.bfs_order[1:].tolist()
    far_edge_pass(g, s_tree, targets, landmarks, lt, lrp, table, scale, counters)
    small_near_pass(g, s_tree, scale, table, counters)
    large_near_pass(g, s_tree, landmarks, lt, lrp, table, scale, counters, targets)
    return table
