"""Brute-force replacement distances, table verification and a lookup index."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import INF, Graph, bfs_tree
from .table import ReplacementTable


def bfs_avoiding(g: Graph, s: int, banned: int | None = None) -> list[int]:
    """Plain queue BFS from ``s`` ignoring edge id ``banned``."""
    dist = [INF] * g.n
    dist[s] = 0
    queue = deque([s])
    indptr, indices, eids = g.indptr, g.indices.tolist(), g.csr_eid.tolist()
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for pos in range(indptr[u], indptr[u + 1]):
            if eids[pos] == banned:
                continue
            w = indices[pos]
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def brute_force_rp(g: Graph, s: int, t: int, e: Sequence[int] | int | None) -> int:
    """Distance from ``s`` to ``t`` in ``G - e`` (``e`` as an edge id or vertex pair)."""
    if e is None:
        banned = None
    elif isinstance(e, (int,)) or hasattr(e, "__index__"):
        banned = int(e)
    else:
        u, v = e
        banned = g.edge_id(int(u), int(v)) if g.has_edge(int(u), int(v)) else None
    return bfs_avoiding(g, s, banned)[t]


@dataclass
class Mismatch:
    source: int
    target: int
    edge: tuple[int, int]
    got: int
    expected: int
    edge_class: str

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "edge": list(self.edge),
            "got": None if self.got >= INF else self.got,
            "expected": None if self.expected >= INF else self.expected,
            "class": self.edge_class,
        }


@dataclass
class VerifyReport:
    checked: int = 0
    missing: list[tuple[int, int, int]] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.missing


def verify_table(g: Graph, sources: Iterable[int], table: ReplacementTable, cfg=None) -> VerifyReport:
    """Check every keyed triple against a BFS in ``G - e`` (one BFS per source and edge).

    ``missing`` lists canonical-path triples the table failed to key.
    """
    from .sampling import AlgoConfig, Scale

    cfg = cfg if cfg is not None else AlgoConfig()
    srcs = sorted(set(int(s) for s in sources))
    scale = Scale.of(g.n, len(srcs), cfg)
    report = VerifyReport()
    for s in srcs:
        tree = bfs_tree(g, s)
        by_edge: dict[int, list[tuple[int, int]]] = {}
        for t in tree.bfs_order.tolist():
            path = tree.path_vertices(t)
            for a, b in zip(path[:-1], path[1:]):
                eid = g.edge_id(a, b)
                if not table.has(s, t, eid):
                    report.missing.append((s, t, eid))
                    continue
                by_edge.setdefault(eid, []).append((t, b))
        for eid, items in sorted(by_edge.items()):
            dist = bfs_avoiding(g, s, eid)
            for t, b in items:
                report.checked += 1
                got = table.get(s, t, eid)
                if got != dist[t]:
                    d = int(tree.dist[t] - tree.dist[b])
                    cls = "near" if d < scale.near else f"far({scale.far_level(d)})"
                    report.mismatches.append(Mismatch(s, t, g.edge(eid), got, dist[t], cls))
    return report


class QueryIndex:
    """Constant-time lookups over a finished table with the off-path fallback."""

    def __init__(self, g: Graph, table: ReplacementTable):
        self.g = g
        self.table = table
        self._dist = {s: bfs_tree(g, s).dist for s in table.sources()}

    def distance(self, s: int, t: int) -> int:
        if s not in self._dist:
            raise KeyError(f"source {s} not in table")
        return int(self._dist[s][t])

    def query(self, s: int, t: int, e: Sequence[int] | int) -> int:
        if s not in self._dist:
            raise KeyError(f"source {s} not in table")
        if isinstance(e, int) or hasattr(e, "__index__"):
            eid = int(e)
        else:
            u, v = int(e[0]), int(e[1])
            if not self.g.has_edge(u, v):
                return int(self._dist[s][t])
            eid = self.g.edge_id(u, v)
        if self.table.has(s, t, eid):
            return self.table.get(s, t, eid)
        return int(self._dist[s][t])


def query(index: QueryIndex, s: int, t: int, e: Sequence[int] | int) -> int:
    return index.query(s, t, e)
