"""Multi-source replacement paths.

With several sources the single-pair routine is too expensive for every
(source, landmark) pair, so landmark distances come from a second sampled
family, the centers.  Each source-to-landmark path is cut into intervals at
centers of rising then falling priority.  A failed edge is either bypassed
through one of its interval's end centers (``mtc``) or the whole interval is
avoided, and one Dijkstra per source handles the hardest edge of every
interval at once.

Hubs are centers plus landmarks; a non-center landmark behaves like a
priority-0 hub when it closes the last interval of a path.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .auxgraph import AuxGraph
from .graph import INF, Graph, ShortestPathTree
from .sampling import AlgoConfig, CenterSets, LandmarkSets, Scale, sample_centers, sample_landmarks
from .ssrp import (
    LandmarkTrees,
    SmallNearState,
    far_edge_pass,
    large_near_pass,
    run_ssrp,
    small_near_pass,
)
from .table import Counters, ReplacementTable


def _span_edges(scale: Scale, cfg: AlgoConfig, priority: int) -> int:
    return int(np.ceil(scale.span(max(priority, 0), cfg)))


@dataclass
class IntervalDecomposition:
    """Centers collected on the canonical ``s -> r`` path and the intervals between them.

    ``cuts`` are path indices (vertex ``path[i]``); interval ``j`` covers path
    edges ``cuts[j] .. cuts[j+1] - 1`` where edge ``p`` joins ``path[p]`` and
    ``path[p+1]``.  The last cut is ``r`` itself when ``r`` is not a center.
    """

    source: int
    target: int
    path: np.ndarray
    cuts: list[int]
    target_is_center: bool

    @property
    def intervals(self) -> list[tuple[int, int]]:
        return [(self.cuts[j], self.cuts[j + 1] - 1) for j in range(len(self.cuts) - 1)]

    def interval_of(self) -> np.ndarray:
        """Interval index of every path edge."""
        out = np.empty(len(self.path) - 1, dtype=np.int64)
        for j, (lo, hi) in enumerate(self.intervals):
            out[lo:hi + 1] = j
        return out


def interval_decomposition(
    t_s: ShortestPathTree,
    r: int,
    centers: CenterSets,
    scale: Scale | None = None,
    cfg: AlgoConfig | None = None,
    counters: Counters | None = None,
) -> IntervalDecomposition:
    path = np.asarray(t_s.path_vertices(r), dtype=np.int64)
    prio = centers.priority[path].tolist()
    picked = set()
    best = -1
    for i, p in enumerate(prio):
        if p > best:
            picked.add(i)
            best = p
    best = -1
    for i in range(len(prio) - 1, -1, -1):
        if prio[i] > best:
            picked.add(i)
            best = prio[i]
    cuts = sorted(picked)
    if not cuts:
        raise ValueError("source is not a center")
    last = len(path) - 1
    target_is_center = cuts[-1] == last
    if not target_is_center:
        cuts.append(last)
    dec = IntervalDecomposition(t_s.root, r, path, cuts, target_is_center)
    if scale is not None and cfg is not None and counters is not None:
        for lo, hi in dec.intervals:
            lower = min(max(prio[lo], 0), max(prio[hi + 1], 0))
            if hi - lo + 1 > _span_edges(scale, cfg, lower):
                counters.interval_overflows += 1
    return dec


@dataclass
class SourceCenterRp:
    """``values[h][q]``: source to hub ``h`` avoiding the path edge whose deeper end is ``q`` hops above ``h``."""

    source: int
    values: dict[int, np.ndarray]

    def lookup(self, h: int, q: int, dist_sh: int) -> int:
        """``q < 0`` means the edge is off the path and the plain distance applies."""
        if q < 0:
            return dist_sh
        row = self.values.get(h)
        if row is None or q >= len(row):
            return INF
        return int(row[q])


def _hub_chains(tree: ShortestPathTree, hubs: np.ndarray, counts: np.ndarray) -> list[np.ndarray]:
    """For each hub, the first ``count`` deeper endpoints going up its tree path."""
    parent = tree.parent
    chains = []
    for h, c in zip(hubs.tolist(), counts.tolist()):
        chain = np.empty(c, dtype=np.int64)
        v = h
        for i in range(c):
            chain[i] = v
            v = int(parent[v])
        chains.append(chain)
    return chains


def source_to_center_pass(
    g: Graph,
    s: int,
    trees: LandmarkTrees,
    hubs: np.ndarray,
    hub_priority: np.ndarray,
    small: SmallNearState,
    scale: Scale,
    cfg: AlgoConfig,
    counters: Counters | None = None,
) -> SourceCenterRp:
    """Replacement distances from ``s`` to each hub for the edges nearest that hub."""
    counters = counters if counters is not None else Counters()
    t_s = trees.trees[trees.pos[s]]
    dist_s = t_s.dist
    idx = t_s.lca_index
    tin, tout = idx.tin, idx.tout
    keep = dist_s[hubs] < INF
    hubs, hub_priority = hubs[keep], hub_priority[keep]
    rows = np.asarray([trees.pos[h] for h in hubs.tolist()], dtype=np.int64)
    spans = np.asarray([_span_edges(scale, cfg, p) for p in hub_priority.tolist()], dtype=np.int64)
    counts = np.minimum(dist_s[hubs], spans)
    chains = _hub_chains(t_s, hubs, counts)
    k = len(hubs)

    aux = AuxGraph()
    aux.block("[s]", 1)
    aux.block("[c]", k)
    base = aux.block("[c,e]", int(counts.sum())) + np.concatenate([[0], np.cumsum(counts)[:-1]]).astype(np.int64)

    aux.add_arcs(np.zeros(k, dtype=np.int64), 1 + np.arange(k), dist_s[hubs])
    total = int(counts.sum())
    if total:
        # one row per [h, e] node
        owner = np.repeat(np.arange(k), counts)
        q = np.arange(total) - np.repeat(base - base[0], counts)
        b = np.concatenate(chains)
        a = t_s.parent[b]
        dst = base[0] + np.arange(total)
        aux.add_arcs(np.zeros(total, dtype=np.int64), dst, small.values(hubs[owner], q))

        hub_dist = trees.dist[rows][:, hubs]  # hub_dist[i, j] = dist(hubs[i], hubs[j])
        w = hub_dist[:, owner].T
        on_sh2 = (tin[b][:, None] <= tin[hubs][None, :]) & (tin[hubs][None, :] <= tout[b][:, None])
        blocked = trees.edge_on_paths(rows, a, b, hubs[owner])
        dst2 = np.broadcast_to(dst[:, None], w.shape)
        plain = ~on_sh2 & ~blocked
        src_plain = np.broadcast_to(1 + np.arange(k)[None, :], w.shape)
        aux.add_arcs(src_plain[plain], dst2[plain], w[plain])
        q2 = dist_s[hubs][None, :] - dist_s[b][:, None]
        carried = on_sh2 & ~blocked & (q2 < counts[None, :])
        carried[np.arange(total), owner] = False
        src_car = base[None, :] + q2
        aux.add_arcs(src_car[carried], dst2[carried], w[carried])

    max_nodes = 1 + k + int(spans.sum())
    aux.check_size(max_nodes, max_nodes * max_nodes, "source-to-center graph")
    counters.aux_nodes += aux.num_nodes
    counters.aux_arcs += aux.num_arcs
    adist, _, pops = aux.dijkstra(0)
    counters.dijkstra_pops += pops
    values = {int(h): adist[base[j]:base[j] + counts[j]].copy() for j, h in enumerate(hubs.tolist())}
    return SourceCenterRp(source=s, values=values)


@dataclass
class EnumeratedSmallPaths:
    """Explicit short detours ``(source, landmark, edge id) -> vertex list``.

    ``through[(c, r, eid)]`` keeps, over all enumerated detours into ``r``
    avoiding ``eid`` that visit center ``c``, the shortest ``c -> r`` remainder
    and the source it came from (ties go to the smaller source id).
    """

    paths: dict[tuple[int, int, int], list[int]] = field(default_factory=dict)
    positions: dict[tuple[int, int, int], dict[int, int]] = field(default_factory=dict)
    through: dict[tuple[int, int, int], tuple[int, int]] = field(default_factory=dict)

    def contains(self, s: int, r: int, eid: int, v: int) -> bool:
        return v in self.positions[(s, r, eid)]

    def through_value(self, c: int, r: int, eid: int) -> int:
        hit = self.through.get((c, r, eid))
        return INF if hit is None else hit[0]


def enumerate_small_paths(
    g: Graph,
    sources: Sequence[int],
    landmarks: Iterable[int],
    small: dict[int, SmallNearState],
    is_center: np.ndarray,
) -> EnumeratedSmallPaths:
    out = EnumeratedSmallPaths()
    lms = np.asarray(sorted(set(int(r) for r in landmarks)), dtype=np.int64)
    for s in sorted(sources):
        if s not in small:
            raise KeyError(f"no short-detour state recorded for source {s}")
        st = small[s]
        tree = st.tree
        for r in lms.tolist():
            c = int(st.count[r])
            if c == 0:
                continue
            vals = st.dist[st.base[r]:st.base[r] + c]
            for d in np.flatnonzero(vals < INF).tolist():
                b = r
                for _ in range(d):
                    b = int(tree.parent[b])
                eid = g.edge_id(int(tree.parent[b]), b)
                walk = st.walk(r, d)
                key = (s, r, eid)
                out.paths[key] = walk
                pos = {v: i for i, v in enumerate(walk)}
                out.positions[key] = pos
                total = len(walk) - 1
                for v, i in pos.items():
                    if not is_center[v]:
                        continue
                    cand = (total - i, s)
                    tkey = (v, r, eid)
                    prev = out.through.get(tkey)
                    if prev is None or cand < prev:
                        out.through[tkey] = cand
    return out


@dataclass
class CenterLandmarkRp:
    """``values[r][p]``: center to landmark ``r`` avoiding the ``p``-th edge of the canonical path from the center."""

    center: int
    values: dict[int, np.ndarray]


def center_to_landmark_pass(
    g: Graph,
    c: int,
    priority: int,
    trees: LandmarkTrees,
    landmarks: np.ndarray,
    enumerated: EnumeratedSmallPaths,
    scale: Scale,
    cfg: AlgoConfig,
    counters: Counters | None = None,
) -> CenterLandmarkRp:
    counters = counters if counters is not None else Counters()
    t_c = trees.trees[trees.pos[c]]
    dist_c = t_c.dist
    idx = t_c.lca_index
    tin, tout = idx.tin, idx.tout
    lms = landmarks[dist_c[landmarks] < INF]
    rows = np.asarray([trees.pos[r] for r in lms.tolist()], dtype=np.int64)
    span = _span_edges(scale, cfg, priority)
    counts = np.minimum(dist_c[lms], span)
    k = len(lms)

    aux = AuxGraph()
    aux.block("[c]", 1)
    aux.block("[r]", k)
    base = aux.block("[r,e]", int(counts.sum())) + np.concatenate([[0], np.cumsum(counts)[:-1]]).astype(np.int64)
    aux.add_arcs(np.zeros(k, dtype=np.int64), 1 + np.arange(k), dist_c[lms])
    total = int(counts.sum())
    if total:
        owner = np.repeat(np.arange(k), counts)
        p = np.arange(total) - np.repeat(base - base[0], counts)
        paths = [np.asarray(t_c.path_vertices(int(r))[: int(cnt) + 1], dtype=np.int64) for r, cnt in zip(lms, counts) if cnt]
        a = np.concatenate([pv[:-1] for pv in paths])
        b = np.concatenate([pv[1:] for pv in paths])
        eids = g.edge_ids(a, b).tolist()
        dst = base[0] + np.arange(total)
        targets = lms[owner]
        through = np.fromiter(
            (enumerated.through_value(c, r, e) for r, e in zip(targets.tolist(), eids)), dtype=np.int64, count=total
        )
        aux.add_arcs(np.zeros(total, dtype=np.int64), dst, through)

        lm_dist = trees.dist[rows][:, lms]  # lm_dist[i, j] = dist(lms[i], lms[j])
        w = lm_dist[:, owner].T
        on_cr2 = (tin[b][:, None] <= tin[lms][None, :]) & (tin[lms][None, :] <= tout[b][:, None])
        blocked = trees.edge_on_paths(rows, a, b, targets)
        dst2 = np.broadcast_to(dst[:, None], w.shape)
        plain = ~on_cr2 & ~blocked
        src_plain = np.broadcast_to(1 + np.arange(k)[None, :], w.shape)
        aux.add_arcs(src_plain[plain], dst2[plain], w[plain])
        carried = on_cr2 & ~blocked & (p[:, None] < counts[None, :])
        carried[np.arange(total), owner] = False
        src_car = base[None, :] + p[:, None]
        aux.add_arcs(src_car[carried], dst2[carried], w[carried])

    max_nodes = 1 + k + k * span
    aux.check_size(max_nodes, k + k * span * (1 + 2 * k), "center-to-landmark graph")
    counters.aux_nodes += aux.num_nodes
    counters.aux_arcs += aux.num_arcs
    adist, _, pops = aux.dijkstra(0)
    counters.dijkstra_pops += pops
    values = {int(r): adist[base[j]:base[j] + counts[j]].copy() for j, r in enumerate(lms.tolist())}
    return CenterLandmarkRp(center=c, values=values)


def mtc_value(
    s: int,
    r: int,
    p: int,
    decomposition: IntervalDecomposition,
    src_ctr: SourceCenterRp,
    ctr_lmk: dict[int, CenterLandmarkRp],
    trees: LandmarkTrees,
) -> int:
    """Best bypass of path edge ``p`` of ``s -> r`` through either end center of its interval."""
    return int(mtc_row(decomposition, src_ctr, ctr_lmk, trees)[p])


def mtc_row(
    dec: IntervalDecomposition,
    src_ctr: SourceCenterRp,
    ctr_lmk: dict[int, CenterLandmarkRp],
    trees: LandmarkTrees,
) -> np.ndarray:
    """MTC for every edge of the canonical ``s -> r`` path."""
    s, r, path = dec.source, dec.target, dec.path
    out = np.full(len(path) - 1, INF, dtype=np.int64)
    d_s = trees.dist[trees.pos[s]]
    for lo, hi in dec.intervals:
        c1 = int(path[lo])
        c2 = int(path[hi + 1])
        p = np.arange(lo, hi + 1)
        a, b = path[p], path[p + 1]

        # through c1: d(s, c1) + (c1 -> r avoiding e)
        i1 = trees.pos[c1]
        row1 = ctr_lmk[c1].values.get(r, np.empty(0, dtype=np.int64))
        t1_par, t1_tin, t1_tout = trees.parent[i1], trees.tin[i1], trees.tout[i1]
        on1 = (t1_par[b] == a) & (t1_tin[b] <= t1_tin[r]) & (t1_tin[r] <= t1_tout[b])
        q1 = p - lo
        in_span = q1 < len(row1)
        term1 = np.where(
            on1,
            np.where(in_span, row1[np.minimum(q1, max(len(row1) - 1, 0))] if len(row1) else INF, INF),
            trees.dist[i1][r],
        )
        term1 = np.minimum(d_s[c1] + term1, INF)

        # through c2: (s -> c2 avoiding e) + d(c2, r)
        row2 = src_ctr.values.get(c2, np.empty(0, dtype=np.int64))
        q2 = hi - p
        in_span2 = q2 < len(row2)
        term2 = np.where(in_span2, row2[np.minimum(q2, max(len(row2) - 1, 0))] if len(row2) else INF, INF)
        term2 = np.minimum(term2 + trees.dist[trees.pos[c2]][r], INF)
        out[lo:hi + 1] = np.minimum(term1, term2)
    return out


def bottleneck_of_interval(
    g: Graph, dec: IntervalDecomposition, i: int, mtc: np.ndarray
) -> int:
    """Path-edge index of the interval's edge with the largest MTC (ties to the smallest edge id)."""
    lo, hi = dec.intervals[i]
    if hi < lo:
        raise ValueError("empty interval")
    p = np.arange(lo, hi + 1)
    vals = mtc[p]
    eids = g.edge_ids(dec.path[p], dec.path[p + 1])
    order = np.lexsort((eids, -vals))
    return int(p[order[0]])


@dataclass
class SourceBottlenecks:
    """Per landmark: decomposition, MTC row, bottleneck edge index and its distance per interval."""

    decomposition: dict[int, IntervalDecomposition]
    mtc: dict[int, np.ndarray]
    bottleneck: dict[int, list[int]]
    value: dict[int, np.ndarray] = field(default_factory=dict)


def bottleneck_pass(
    g: Graph,
    s: int,
    landmarks: np.ndarray,
    trees: LandmarkTrees,
    bn: SourceBottlenecks,
    small: SmallNearState,
    scale: Scale,
    counters: Counters | None = None,
) -> dict[int, np.ndarray]:
    """Distance from ``s`` to every landmark avoiding each interval's bottleneck edge."""
    counters = counters if counters is not None else Counters()
    t_s = trees.trees[trees.pos[s]]
    dist_s = t_s.dist
    idx = t_s.lca_index
    tin, tout = idx.tin, idx.tout
    lms = np.asarray([r for r in landmarks.tolist() if r in bn.decomposition], dtype=np.int64)
    k = len(lms)
    rows = np.asarray([trees.pos[r] for r in lms.tolist()], dtype=np.int64)
    n_int = np.asarray([len(bn.bottleneck[r]) for r in lms.tolist()], dtype=np.int64)

    aux = AuxGraph()
    aux.block("[s]", 1)
    aux.block("[r]", k)
    base = aux.block("[s,r,i]", int(n_int.sum())) + np.concatenate([[0], np.cumsum(n_int)[:-1]]).astype(np.int64)
    aux.add_arcs(np.zeros(k, dtype=np.int64), 1 + np.arange(k), dist_s[lms])

    width = int(max((len(bn.mtc[r]) for r in lms.tolist()), default=0))
    mtc_mat = np.full((k, max(width, 1)), INF, dtype=np.int64)
    int_mat = np.full((k, max(width, 1)), -1, dtype=np.int64)
    for j, r in enumerate(lms.tolist()):
        m = bn.mtc[r]
        mtc_mat[j, : len(m)] = m
        int_mat[j, : len(m)] = bn.decomposition[r].interval_of()
    lm_dist = trees.dist[rows][:, lms]
    dist_lm = dist_s[lms]

    total = int(n_int.sum())
    if total:
        # one row per [s, r, i] node; B sits at path index p of s -> r
        owner = np.repeat(np.arange(k), n_int)
        p = np.concatenate([np.asarray(bn.bottleneck[r], dtype=np.int64) for r in lms.tolist() if bn.bottleneck[r]])
        a = np.concatenate([bn.decomposition[r].path[bn.bottleneck[r]] for r in lms.tolist() if bn.bottleneck[r]])
        b = np.concatenate([bn.decomposition[r].path[np.asarray(bn.bottleneck[r]) + 1] for r in lms.tolist() if bn.bottleneck[r]])
        targets = lms[owner]
        dst = base[0] + np.arange(total)
        zeros = np.zeros(total, dtype=np.int64)
        aux.add_arcs(zeros, dst, small.values(targets, dist_s[targets] - (p + 1)))
        aux.add_arcs(zeros, dst, mtc_mat[owner, p])

        w = lm_dist[:, owner].T
        on_s = (tin[b][:, None] <= tin[lms][None, :]) & (tin[lms][None, :] <= tout[b][:, None])
        blocked = trees.edge_on_paths(rows, a, b, targets)
        dst2 = np.broadcast_to(dst[:, None], w.shape)
        plain = ~on_s & ~blocked
        src_plain = np.broadcast_to(1 + np.arange(k)[None, :], w.shape)
        aux.add_arcs(src_plain[plain], dst2[plain], w[plain])
        # B also sits on s -> r' at the same index p (tree paths share prefixes)
        via = on_s & ~blocked & (dist_lm[None, :] > p[:, None])
        via[np.arange(total), owner] = False
        cols = np.broadcast_to(np.arange(k)[None, :], w.shape)
        pp = np.broadcast_to(p[:, None], w.shape)
        aux.add_arcs(np.zeros(int(via.sum()), dtype=np.int64), dst2[via], mtc_mat[cols[via], pp[via]] + w[via])
        aux.add_arcs(base[cols[via]] + int_mat[cols[via], pp[via]], dst2[via], w[via])

    max_nodes = 1 + k + 2 * (scale.k_max + 1) * k
    aux.check_size(max_nodes, k + 2 * (scale.k_max + 1) * k * (3 + 2 * k), "bottleneck graph")
    counters.aux_nodes += aux.num_nodes
    counters.aux_arcs += aux.num_arcs
    adist, _, pops = aux.dijkstra(0)
    counters.dijkstra_pops += pops
    out = {}
    for j, r in enumerate(lms.tolist()):
        out[r] = adist[base[j]:base[j] + n_int[j]].copy()
    bn.value = out
    return out


def assemble_landmark_rp(dec: IntervalDecomposition, mtc: np.ndarray, bottleneck_values: np.ndarray) -> np.ndarray:
    """Replacement distance for every edge of ``s -> r``: min of its MTC and its interval's bottleneck value."""
    return np.minimum(mtc, bottleneck_values[dec.interval_of()])


@dataclass
class MsrpState:
    """Intermediate products of :func:`run_msrp`, kept for inspection and tests."""

    scale: Scale
    landmarks: LandmarkSets
    centers: CenterSets
    trees: LandmarkTrees
    small: dict[int, SmallNearState]
    src_ctr: dict[int, SourceCenterRp]
    enumerated: EnumeratedSmallPaths
    ctr_lmk: dict[int, CenterLandmarkRp]
    bottlenecks: dict[int, SourceBottlenecks]
    landmark_rp: dict[int, np.ndarray]


def run_msrp(
    g: Graph,
    sources: Iterable[int],
    cfg: AlgoConfig | None = None,
    counters: Counters | None = None,
    keep_state: bool = False,
):
    """Replacement distances from every source to every vertex.

    With one source this is exactly :func:`~replpath.ssrp.run_ssrp`.  Returns
    the table, or ``(table, MsrpState)`` when ``keep_state`` is set.
    """
    cfg = cfg if cfg is not None else AlgoConfig()
    counters = counters if counters is not None else Counters()
    srcs = sorted(set(int(s) for s in sources))
    if not srcs:
        raise ValueError("at least one source is required")
    if srcs[0] < 0 or srcs[-1] >= g.n:
        raise ValueError("source out of range")
    if len(srcs) == 1 and not keep_state:
        return run_ssrp(g, srcs[0], cfg, counters)

    sigma = len(srcs)
    scale = Scale.of(g.n, sigma, cfg)
    landmarks = sample_landmarks(g, srcs, cfg)
    centers = sample_centers(g, srcs, cfg)
    lms = landmarks.union
    hubs = np.union1d(lms, centers.centers)
    trees = LandmarkTrees(g, hubs)
    hub_priority = np.where(centers.priority[hubs] >= 0, centers.priority[hubs], 0)

    table = ReplacementTable(g)
    small: dict[int, SmallNearState] = {}
    for s in srcs:
        t_s = trees.trees[trees.pos[s]]
        table.add_source(t_s)
        small[s] = small_near_pass(g, t_s, scale, table, counters)

    src_ctr = {
        s: source_to_center_pass(g, s, trees, hubs, hub_priority, small[s], scale, cfg, counters) for s in srcs
    }
    enumerated = enumerate_small_paths(g, srcs, lms, small, centers.priority >= 0)
    ctr_lmk = {
        int(c): center_to_landmark_pass(
            g, int(c), int(centers.priority[c]), trees, lms, enumerated, scale, cfg, counters
        )
        for c in centers.centers.tolist()
    }

    bottlenecks: dict[int, SourceBottlenecks] = {}
    lrp_all: dict[int, np.ndarray] = {}
    for s in srcs:
        t_s = trees.trees[trees.pos[s]]
        decs, mtcs, bns = {}, {}, {}
        for r in lms.tolist():
            if r == s or not t_s.reachable(r):
                continue
            dec = interval_decomposition(t_s, r, centers, scale, cfg, counters)
            m = mtc_row(dec, src_ctr[s], ctr_lmk, trees)
            decs[r], mtcs[r] = dec, m
            bns[r] = [bottleneck_of_interval(g, dec, i, m) for i in range(len(dec.intervals))]
        bn = SourceBottlenecks(decomposition=decs, mtc=mtcs, bottleneck=bns)
        bottleneck_pass(g, s, lms, trees, bn, small[s], scale, counters)
        bottlenecks[s] = bn

        lrp = np.broadcast_to(t_s.dist[trees.roots], (g.n, len(trees.roots))).copy()
        for r, dec in decs.items():
            lrp[dec.path[1:], trees.pos[r]] = assemble_landmark_rp(dec, mtcs[r], bn.value[r])
        lrp_all[s] = lrp

        targets = t_s.bfs_order[1:].tolist()
        far_edge_pass(g, t_s, targets, landmarks, trees, lrp, table, scale, counters)
        large_near_pass(g, t_s, landmarks, trees, lrp, table, scale, counters, targets)

    if keep_state:
        state = MsrpState(scale, landmarks, centers, trees, small, src_ctr, enumerated, ctr_lmk, bottlenecks, lrp_all)
        return table, state
    return table
