"""Undirected unweighted graphs, BFS shortest-path trees and O(1) ancestor / LCA queries.

Vertices are ``0..n-1``.  Every undirected edge has a dense id in ``[0, m)``
assigned in input order.  Unreachable distances use the :data:`INF` sentinel,
an integer larger than any finite distance and safe to add three times in
``int64`` arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path as csgraph_shortest_path

INF = 1 << 60


class GraphError(ValueError):
    """Base class for graph input problems."""


class GraphParseError(GraphError):
    """Malformed edge-list text."""


class GraphValidationError(GraphError):
    """Well-formed input describing an invalid simple graph."""


def _clip(values: np.ndarray) -> np.ndarray:
    return np.minimum(values, INF)


class Graph:
    """Immutable simple undirected graph in CSR form.

    ``indices[indptr[v]:indptr[v+1]]`` is the ascending neighbour list of ``v``
    and ``csr_eid`` holds the matching edge ids.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphValidationError("vertex count must be non-negative")
        pairs = []
        seen: dict[tuple[int, int], int] = {}
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphValidationError(f"duplicate edge {key}")
            seen[key] = len(pairs)
            pairs.append(key)

        self.n = n
        self.m = len(pairs)
        self._edge_id = seen
        self.edges = np.array(pairs, dtype=np.int64).reshape(-1, 2)

        src = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        dst = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        eid = np.concatenate([np.arange(self.m), np.arange(self.m)])
        order = np.lexsort((dst, src))
        self.indices = dst[order]
        self.csr_eid = eid[order]
        self.csr_rows = src[order]
        self.degree = np.bincount(src, minlength=n).astype(np.int64)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(self.degree, out=self.indptr[1:])
        self._keys = self.csr_rows * max(n, 1) + self.indices
        self._matrix = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_id

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_id[key]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def edge_ids(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`edge_id`; every pair must be an edge."""
        keys = np.asarray(us, dtype=np.int64) * max(self.n, 1) + np.asarray(vs, dtype=np.int64)
        pos = np.searchsorted(self._keys, keys)
        return self.csr_eid[pos]

    def edge(self, eid: int) -> tuple[int, int]:
        u, v = self.edges[eid]
        return int(u), int(v)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges.tolist())
        return "\n".join(lines) + "\n"

    def without_edges(self, eids: Iterable[int]) -> "Graph":
        drop = set(int(e) for e in eids)
        return Graph(self.n, [e for i, e in enumerate(self.edges.tolist()) if i not in drop])


def load_graph(text: str) -> Graph:
    """Parse the ``"n m"`` header plus ``m`` lines of ``"u v"``."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphParseError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphParseError(f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(body)} lines")
    edges = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    return Graph(n, edges)


def _adjacency_matrix(g: Graph) -> csr_matrix:
    if g._matrix is None:
        g._matrix = csr_matrix((np.ones(len(g.indices)), g.indices, g.indptr), shape=(g.n, g.n))
    return g._matrix


def bfs_distances(g: Graph, root: int) -> np.ndarray:
    """Hop distances from ``root``; unreachable vertices get :data:`INF`."""
    fdist = csgraph_shortest_path(_adjacency_matrix(g), method="D", unweighted=True, indices=root)
    dist = np.full(g.n, INF, dtype=np.int64)
    reached = np.isfinite(fdist)
    dist[reached] = fdist[reached].astype(np.int64)
    return dist


@dataclass(eq=False)
class ShortestPathTree:
    """BFS tree of ``root`` with the min-id parent rule.

    ``parent[v]`` is the smallest neighbour of ``v`` one level closer to the
    root; it is ``-1`` for the root and for unreachable vertices.
    """

    root: int
    dist: np.ndarray
    parent: np.ndarray
    bfs_order: np.ndarray
    _lca: "LcaIndex | None" = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.dist)

    def reachable(self, v: int) -> bool:
        return self.dist[v] < INF

    @property
    def lca_index(self) -> "LcaIndex":
        if self._lca is None:
            self._lca = LcaIndex(self)
        return self._lca

    def path_vertices(self, v: int) -> list[int]:
        """Canonical root -> ``v`` vertex sequence."""
        if not self.reachable(v):
            raise ValueError(f"vertex {v} unreachable from {self.root}")
        out = [v]
        parent = self.parent
        while out[-1] != self.root:
            out.append(int(parent[out[-1]]))
        out.reverse()
        return out

    def path_children(self, v: int) -> np.ndarray:
        """Deeper endpoints of the canonical path edges, root side first."""
        return np.asarray(self.path_vertices(v)[1:], dtype=np.int64)


def bfs_tree(g: Graph, root: int) -> ShortestPathTree:
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    dist = bfs_distances(g, root)
    parent = np.full(g.n, -1, dtype=np.int64)
    rows, cols = g.csr_rows, g.indices
    # Neighbour lists are sorted, so the first qualifying entry per row is the min id.
    mask = (dist[rows] < INF) & (dist[rows] > 0) & (dist[cols] == dist[rows] - 1)
    r, c = rows[mask], cols[mask]
    uniq, first = np.unique(r, return_index=True)
    parent[uniq] = c[first]
    reach = np.flatnonzero(dist < INF)
    order = reach[np.argsort(dist[reach], kind="stable")]
    return ShortestPathTree(root=root, dist=dist, parent=parent, bfs_order=order)


class LcaIndex:
    """Constant-time ancestor and LCA queries on a :class:`ShortestPathTree`.

    ``tin``/``tout`` are the preorder entry and exit positions (the first and
    last Euler-tour occurrences, up to relabelling), so ``u`` is an ancestor of
    ``v`` iff ``tin[u] <= tin[v] <= tout[u]``, i.e. iff ``lca(u, v) == u``.  The
    Euler tour with its range-minimum sparse table is built on the first
    :meth:`lca` call.
    """

    def __init__(self, tree: ShortestPathTree):
        self.tree = tree
        n = tree.n
        dist, parent, order = tree.dist, tree.parent, tree.bfs_order
        size = np.zeros(n, dtype=np.int64)
        size[order] = 1
        depths = dist[order]
        bounds = np.flatnonzero(np.diff(depths)) + 1
        levels = np.split(order, bounds)
        for lvl in reversed(levels[1:]):
            np.add.at(size, parent[lvl], size[lvl])

        tin = np.full(n, -1, dtype=np.int64)
        tout = np.full(n, -2, dtype=np.int64)
        nonroot = order[1:]
        if nonroot.size:
            sib = nonroot[np.lexsort((nonroot, parent[nonroot]))]
            csum = np.cumsum(size[sib])
            par = parent[sib]
            group_start = np.r_[True, par[1:] != par[:-1]]
            base = np.where(group_start, csum - size[sib], 0)
            base = np.maximum.accumulate(base)
            offset = np.zeros(n, dtype=np.int64)
            offset[sib] = csum - size[sib] - base
        else:
            offset = np.zeros(n, dtype=np.int64)
        tin[tree.root] = 0
        for lvl in levels[1:]:
            tin[lvl] = tin[parent[lvl]] + 1 + offset[lvl]
        reach = order
        tout[reach] = tin[reach] + size[reach] - 1
        self.tin = tin
        self.tout = tout
        self.size = size
        self._euler: np.ndarray | None = None

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` lies on the tree path root -> ``v`` (``u == v`` included)."""
        return bool(self.tin[u] <= self.tin[v] <= self.tout[u])

    def _build_euler(self) -> None:
        tree = self.tree
        n = tree.n
        children: list[list[int]] = [[] for _ in range(n)]
        for v in tree.bfs_order[1:].tolist():
            children[int(tree.parent[v])].append(v)
        for ch in children:
            ch.sort()
        euler: list[int] = []
        first = np.full(n, -1, dtype=np.int64)
        stack = [(tree.root, 0)]
        while stack:
            v, i = stack.pop()
            if i == 0:
                first[v] = len(euler)
            euler.append(v)
            if i < len(children[v]):
                stack.append((v, i + 1))
                stack.append((children[v][i], 0))
        tour = np.asarray(euler, dtype=np.int64)
        depth = tree.dist[tour]
        length = len(tour)
        levels = max(1, length.bit_length())
        table = np.empty((levels, length), dtype=np.int64)
        table[0] = np.arange(length)
        span = 1
        for k in range(1, levels):
            prev = table[k - 1]
            left = prev[: length - span]
            right = prev[span:]
            pick = np.where(depth[right] < depth[left], right, left)
            table[k, : length - span] = pick
            table[k, length - span:] = prev[length - span:]
            span *= 2
        self._euler = tour
        self._first = first
        self._table = table
        self._tour_depth = depth

    def lca(self, u: int, v: int) -> int:
        tree = self.tree
        if not (tree.reachable(u) and tree.reachable(v)):
            raise ValueError(f"lca({u}, {v}): vertex outside the tree of {tree.root}")
        if self._euler is None:
            self._build_euler()
        a, b = int(self._first[u]), int(self._first[v])
        if a > b:
            a, b = b, a
        k = (b - a + 1).bit_length() - 1
        i, j = self._table[k, a], self._table[k, b - (1 << k) + 1]
        best = i if self._tour_depth[i] <= self._tour_depth[j] else j
        return int(self._euler[best])


def lca(idx: LcaIndex, u: int, v: int) -> int:
    return idx.lca(u, v)


def canonical_path_edges(t: ShortestPathTree, v: int) -> list[tuple[int, int]]:
    """Tree-path edges root -> ``v`` in order, each as (closer, farther)."""
    verts = t.path_vertices(v)
    return list(zip(verts[:-1], verts[1:]))


def tree_child(t: ShortestPathTree, e: Sequence[int]) -> int:
    """Deeper endpoint of ``e`` if it is a tree edge of ``t``, else ``-1``."""
    a, b = int(e[0]), int(e[1])
    if t.parent[b] == a:
        return b
    if t.parent[a] == b:
        return a
    return -1


def edge_on_path(t: ShortestPathTree, idx: LcaIndex, e: Sequence[int], v: int) -> bool:
    """Whether ``e`` lies on the canonical root -> ``v`` path (``lca(child, v) == child``)."""
    child = tree_child(t, e)
    if child < 0 or not t.reachable(v):
        return False
    return idx.is_ancestor(child, v)


class DistanceStore:
    """Hash map ``(root, vertex) -> hop distance`` backed by per-root arrays."""

    def __init__(self) -> None:
        self._rows: dict[int, np.ndarray] = {}

    def add_tree(self, t: ShortestPathTree) -> None:
        self._rows[t.root] = t.dist

    def __contains__(self, root: int) -> bool:
        return root in self._rows

    def get(self, root: int, v: int) -> int:
        return int(self._rows[root][v])

    def row(self, root: int) -> np.ndarray:
        return self._rows[root]

    def roots(self) -> list[int]:
        return list(self._rows)
