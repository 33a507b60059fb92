"""Replacement-distance table keyed by (source, target, path edge) and work counters."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterator

import numpy as np

from .graph import INF, Graph, ShortestPathTree


@dataclass
class Counters:
    aux_nodes: int = 0
    aux_arcs: int = 0
    dijkstra_pops: int = 0
    far_work: int = 0
    near_scan_work: int = 0
    interval_overflows: int = 0
    far_work_by_target: dict[int, int] = field(default_factory=dict, repr=False)

    def as_dict(self) -> dict[str, int]:
        out = asdict(self)
        out.pop("far_work_by_target")
        return out

    def merge(self, other: "Counters") -> None:
        for name, val in other.as_dict().items():
            setattr(self, name, getattr(self, name) + val)
        for t, w in other.far_work_by_target.items():
            self.far_work_by_target[t] = self.far_work_by_target.get(t, 0) + w


class ReplacementTable:
    """Distances for every edge of each canonical source -> target path.

    Row ``(s, t)`` is an int64 array whose ``j``-th entry is the replacement
    distance when the ``j``-th edge of the path (counted from ``s``) fails.
    Passes only ever lower entries.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._trees: dict[int, ShortestPathTree] = {}
        self._rows: dict[int, dict[int, np.ndarray]] = {}

    def add_source(self, tree: ShortestPathTree) -> None:
        s = tree.root
        self._trees[s] = tree
        rows = {}
        for t in tree.bfs_order[1:].tolist():
            rows[t] = np.full(int(tree.dist[t]), INF, dtype=np.int64)
        self._rows[s] = rows

    def absorb(self, other: "ReplacementTable") -> None:
        """Take over the sources of ``other`` (a table over the same graph)."""
        for s in other.sources():
            if s in self._rows:
                raise ValueError(f"source {s} present in both tables")
            self._trees[s] = other._trees[s]
            self._rows[s] = other._rows[s]

    def sources(self) -> list[int]:
        return sorted(self._rows)

    def tree(self, s: int) -> ShortestPathTree:
        return self._trees[s]

    def row(self, s: int, t: int) -> np.ndarray:
        return self._rows[s][t]

    def targets(self, s: int) -> list[int]:
        return list(self._rows[s])

    def merge_row(self, s: int, t: int, values: np.ndarray) -> None:
        row = self._rows[s][t]
        np.minimum(row, values, out=row)

    def merge_at(self, s: int, t: int, pos: np.ndarray, values: np.ndarray) -> None:
        row = self._rows[s][t]
        row[pos] = np.minimum(row[pos], values)

    def _position(self, s: int, t: int, eid: int) -> int:
        tree = self._trees[s]
        a, b = self.g.edge(eid)
        if tree.parent[a] == b:
            a, b = b, a
        if tree.parent[b] != a or not tree.reachable(t) or t == s:
            return -1
        if not tree.lca_index.is_ancestor(b, t):
            return -1
        return int(tree.dist[b]) - 1

    def has(self, s: int, t: int, eid: int) -> bool:
        return s in self._rows and t in self._rows[s] and self._position(s, t, eid) >= 0

    def get(self, s: int, t: int, eid: int) -> int:
        pos = self._position(s, t, eid)
        if pos < 0:
            raise KeyError((s, t, eid))
        return int(self._rows[s][t][pos])

    def set(self, s: int, t: int, eid: int, value: int) -> None:
        pos = self._position(s, t, eid)
        if pos < 0:
            raise KeyError((s, t, eid))
        self._rows[s][t][pos] = value

    def records(self) -> Iterator[tuple[int, int, int, int]]:
        """``(source, target, edge id, dist)`` ordered by source, target, edge id."""
        g = self.g
        for s in self.sources():
            tree = self._trees[s]
            rows = self._rows[s]
            for t in sorted(rows):
                path = tree.path_vertices(t)
                eids = g.edge_ids(np.asarray(path[:-1]), np.asarray(path[1:]))
                order = np.argsort(eids, kind="stable")
                vals = rows[t]
                for j in order.tolist():
                    yield s, t, int(eids[j]), int(vals[j])

    def __len__(self) -> int:
        return sum(len(r) for rows in self._rows.values() for r in rows.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReplacementTable):
            return NotImplemented
        if self._rows.keys() != other._rows.keys():
            return False
        for s, rows in self._rows.items():
            orows = other._rows[s]
            if rows.keys() != orows.keys():
                return False
            if any(not np.array_equal(rows[t], orows[t]) for t in rows):
                return False
        return True
