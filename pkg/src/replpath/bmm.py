"""Boolean matrix product through replacement-path queries.

For ``N x N`` matrices and ``sigma`` sources let ``q = sqrt(N / sigma)``.  Each
of the ``q`` instances encodes ``sigma * q`` rows of ``A``: spine vertices
``v(1..sigma*q)`` form ``sigma`` paths of ``q`` vertices, the last vertex of each
path is a source, and ``v(j)`` hangs a connector of ``2*o + 2`` edges onto
``a(row)``, where ``o = (j - 1) mod q``.  From its source ``v(j)`` is ``q - 1 - o``
hops away, so ``c(l)`` is exactly ``q + o + 3`` hops away iff ``C[row][l] = 1``.
Rows with ``o > 0`` are read after failing the spine edge just before ``v(j)``,
which cuts off the cheaper rows of the same block.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .oracle import QueryIndex
from .sampling import AlgoConfig


def parse_matrix(text: str) -> np.ndarray:
    """``"n"`` on the first line, then ``n`` rows of ``0``/``1`` characters."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"bad matrix header {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != n or any(len(r) != n or set(r) - {"0", "1"} for r in rows):
        raise ValueError(f"expected {n} rows of {n} characters from {{0,1}}")
    return np.array([[ch == "1" for ch in r] for r in rows], dtype=bool).reshape(n, n)


def format_matrix(m: np.ndarray) -> str:
    rows = ["".join("1" if x else "0" for x in row) for row in np.asarray(m, dtype=bool)]
    return "\n".join([str(len(rows))] + rows) + "\n"


def padded_size(n: int, sigma: int) -> tuple[int, int]:
    """``(N, q)`` with ``N = sigma * q**2 >= n``."""
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    q = max(1, math.ceil(math.sqrt(n / sigma)))
    while sigma * q * q < n:
        q += 1
    return sigma * q * q, q


@dataclass(frozen=True)
class Probe:
    """One decoded cell block: row ``row`` of ``C`` read from ``source``."""

    row: int
    source: int
    failed: tuple[int, int] | None
    expected: int


@dataclass
class ReductionInstance:
    graph: Graph
    sources: list[int]
    probes: list[Probe]
    c_vertex: np.ndarray  # c_vertex[l] = vertex id of c(l), 0-based l


def build_reduction_graph(A: np.ndarray, B: np.ndarray, sigma: int, i: int) -> ReductionInstance:
    """Instance ``i`` (1-based) of the reduction for already padded ``N x N`` matrices."""
    A = np.asarray(A, dtype=bool)
    B = np.asarray(B, dtype=bool)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise ValueError("A and B must be square matrices of the same size")
    n = A.shape[0]
    q = math.isqrt(n // sigma) if n % sigma == 0 else 0
    if q == 0 or sigma * q * q != n:
        raise ValueError(f"size {n} is not sigma * q^2 for sigma={sigma}; pad first")
    if not 1 <= i <= q:
        raise ValueError(f"instance index must lie in 1..{q}")
    spine = sigma * q

    a0, b0, c0, v0 = 0, n, 2 * n, 3 * n
    nxt = v0 + spine
    edges: list[tuple[int, int]] = []
    xs, ys = np.nonzero(A)
    edges.extend(zip((a0 + xs).tolist(), (b0 + ys).tolist()))
    xs, ys = np.nonzero(B)
    edges.extend(zip((b0 + xs).tolist(), (c0 + ys).tolist()))

    sources = []
    probes = []
    for j in range(1, spine + 1):
        o = (j - 1) % q
        v = v0 + j - 1
        if o > 0:
            edges.append((v - 1, v))
        # connector with 2o+1 inner vertices
        prev = v
        for _ in range(2 * o + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        row = (i - 1) * spine + j  # 1-based
        edges.append((prev, a0 + row - 1))
        block_end = v0 + ((j - 1) // q + 1) * q - 1
        if o == q - 1:
            sources.append(v)
        probes.append(Probe(row=row - 1, source=block_end, failed=(v - 1, v) if o > 0 else None, expected=q + o + 3))

    g = Graph(nxt, edges)
    if g.n > 4 * n + spine or g.m > int(A.sum() + B.sum()) + 2 * n + spine:
        raise AssertionError("reduction instance exceeds its size bound")
    return ReductionInstance(graph=g, sources=sources, probes=probes, c_vertex=c0 + np.arange(n))


def boolean_multiply(A: np.ndarray, B: np.ndarray, sigma: int, cfg: AlgoConfig | None = None, solver=None) -> np.ndarray:
    """``A x B`` over the Boolean semiring, read off replacement distances.

    ``solver(g, sources, cfg)`` defaults to :func:`~replpath.msrp.run_msrp`.
    """
    from .msrp import run_msrp

    A = np.asarray(A, dtype=bool)
    B = np.asarray(B, dtype=bool)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise ValueError("A and B must be square matrices of the same size")
    n = A.shape[0]
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    size, q = padded_size(n, sigma)
    Ap = np.zeros((size, size), dtype=bool)
    Bp = np.zeros((size, size), dtype=bool)
    Ap[:n, :n] = A
    Bp[:n, :n] = B
    cfg = cfg if cfg is not None else AlgoConfig()
    solver = solver if solver is not None else run_msrp

    C = np.zeros((size, size), dtype=bool)
    for i in range(1, q + 1):
        inst = build_reduction_graph(Ap, Bp, sigma, i)
        table = solver(inst.graph, inst.sources, cfg)
        index = QueryIndex(inst.graph, table)
        for pr in inst.probes:
            if pr.row >= n:
                continue
            for col in range(n):
                t = int(inst.c_vertex[col])
                if pr.failed is None:
                    d = index.distance(pr.source, t)
                else:
                    d = index.query(pr.source, t, pr.failed)
                C[pr.row, col] = d == pr.expected
    return C[:n, :n]
