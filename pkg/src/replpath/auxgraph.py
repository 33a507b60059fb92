"""Weighted directed scaffold shared by all auxiliary-graph constructions.

Nodes are allocated in named blocks (``"[s]"``, ``"[v]"``, ``"[t,e]"`` and so
on) so every node carries a unique tag ``(block, offset)``.  Arcs are added in
bulk as numpy arrays and frozen into a sparse matrix before Dijkstra runs.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra as csgraph_dijkstra

from .graph import INF


class AuxSizeError(AssertionError):
    """An auxiliary graph outgrew its proven size bound."""


class AuxGraph:
    def __init__(self) -> None:
        self.num_nodes = 0
        self._blocks: dict[str, tuple[int, int]] = {}
        self._src: list[np.ndarray] = []
        self._dst: list[np.ndarray] = []
        self._w: list[np.ndarray] = []
        self.finalized = False

    def block(self, name: str, count: int) -> int:
        """Reserve ``count`` nodes tagged ``name``; returns the first id."""
        if name in self._blocks:
            raise ValueError(f"duplicate node block {name!r}")
        base = self.num_nodes
        self._blocks[name] = (base, count)
        self.num_nodes += count
        return base

    def tag(self, node: int) -> tuple[str, int]:
        for name, (base, count) in self._blocks.items():
            if base <= node < base + count:
                return name, node - base
        raise KeyError(node)

    def add_arcs(self, src, dst, w) -> None:
        src = np.asarray(src, dtype=np.int64).reshape(-1)
        dst = np.asarray(dst, dtype=np.int64).reshape(-1)
        w = np.broadcast_to(np.asarray(w, dtype=np.int64), src.shape).reshape(-1)
        keep = w < INF
        if not keep.all():
            src, dst, w = src[keep], dst[keep], w[keep]
        if src.size == 0:
            return
        if (w < 0).any():
            raise ValueError("negative arc weight")
        self._src.append(src)
        self._dst.append(dst)
        self._w.append(w.copy())

    @property
    def num_arcs(self) -> int:
        return int(sum(a.size for a in self._src))

    def check_size(self, max_nodes: float, max_arcs: float, what: str) -> None:
        if self.num_nodes > max_nodes or self.num_arcs > max_arcs:
            raise AuxSizeError(
                f"{what}: {self.num_nodes} nodes / {self.num_arcs} arcs exceed "
                f"bounds {max_nodes:.0f} / {max_arcs:.0f}"
            )

    def finalize(self) -> None:
        if self._src:
            src = np.concatenate(self._src)
            dst = np.concatenate(self._dst)
            w = np.concatenate(self._w)
        else:
            src = dst = w = np.empty(0, dtype=np.int64)
        # parallel arcs collapse to the lightest one
        order = np.lexsort((w, dst, src))
        src, dst, w = src[order], dst[order], w[order]
        first = np.ones(src.size, dtype=bool)
        first[1:] = (src[1:] != src[:-1]) | (dst[1:] != dst[:-1])
        self.matrix = csr_matrix(
            (w[first].astype(np.float64), (src[first], dst[first])),
            shape=(self.num_nodes, self.num_nodes),
        )
        self.finalized = True

    def dijkstra(self, source: int) -> tuple[np.ndarray, np.ndarray, int]:
        """Returns ``(dist, pred, pops)``; ``pred`` is -1 at the source and unreached nodes."""
        if not self.finalized:
            self.finalize()
        fdist, fpred = csgraph_dijkstra(self.matrix, directed=True, indices=source, return_predecessors=True)
        reached = np.isfinite(fdist)
        dist = np.full(self.num_nodes, INF, dtype=np.int64)
        dist[reached] = np.rint(fdist[reached]).astype(np.int64)
        pred = np.where(fpred < 0, -1, fpred).astype(np.int64)
        return dist, pred, int(reached.sum())
