"""Seeded graph generators used by the CLI, tests and benchmarks."""
from __future__ import annotations

import numpy as np

from .graph import INF, Graph, bfs_distances

KINDS = ("erdos-renyi", "cycle", "path", "grid", "path-plus-chords")


class GenerationError(RuntimeError):
    pass


def is_connected(g: Graph) -> bool:
    return g.n == 0 or bool((bfs_distances(g, 0) < INF).all())


def erdos_renyi(n: int, p: float, seed: int = 0, attempts: int = 100) -> Graph:
    """Connected G(n, p); redraws up to ``attempts`` times."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(attempts):
        keep = rng.random(iu.size) < p
        g = Graph(n, np.stack([iu[keep], ju[keep]], axis=1))
        if is_connected(g):
            return g
    raise GenerationError(f"no connected G({n}, {p}) after {attempts} attempts")


def erdos_renyi_m(n: int, m: int, seed: int = 0, attempts: int = 100) -> Graph:
    """Connected uniform graph with exactly ``m`` edges (for large sparse instances)."""
    max_m = n * (n - 1) // 2
    if not 0 <= m <= max_m:
        raise ValueError(f"m must lie in [0, {max_m}]")
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        keys = set()
        while len(keys) < m:
            u, v = rng.integers(0, n, size=(2, 2 * (m - len(keys)) + 16))
            for a, b in zip(u.tolist(), v.tolist()):
                if a != b:
                    keys.add((a, b) if a < b else (b, a))
                    if len(keys) == m:
                        break
        g = Graph(n, sorted(keys))
        if is_connected(g):
            return g
    raise GenerationError(f"no connected graph with n={n}, m={m} after {attempts} attempts")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def grid(w: int, h: int) -> Graph:
    if w < 1 or h < 1:
        raise ValueError("grid sides must be positive")
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    return Graph(w * h, edges)


def path_plus_chords(n: int, chords: int, seed: int = 0) -> Graph:
    """Path ``0..n-1`` plus ``chords`` distinct random non-path edges."""
    if n < 1:
        raise ValueError("n must be positive")
    max_chords = n * (n - 1) // 2 - (n - 1)
    if not 0 <= chords <= max_chords:
        raise ValueError(f"chords must lie in [0, {max_chords}]")
    rng = np.random.default_rng(seed)
    edges = {(i, i + 1) for i in range(n - 1)}
    extra = []
    while len(extra) < chords:
        a, b = sorted(rng.integers(0, n, size=2).tolist())
        if b - a >= 2 and (a, b) not in edges:
            edges.add((a, b))
            extra.append((a, b))
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + extra)


def generate_graph(kind: str, params: dict, seed: int = 0) -> Graph:
    if kind == "erdos-renyi":
        if "m" in params and params.get("m") is not None:
            return erdos_renyi_m(int(params["n"]), int(params["m"]), seed)
        return erdos_renyi(int(params["n"]), float(params["p"]), seed)
    if kind == "cycle":
        return cycle(int(params["n"]))
    if kind == "path":
        return path(int(params["n"]))
    if kind == "grid":
        return grid(int(params["w"]), int(params["h"]))
    if kind == "path-plus-chords":
        return path_plus_chords(int(params["n"]), int(params["chords"]), seed)
    raise ValueError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
