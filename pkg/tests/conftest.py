"""Shared helpers: an independent reference oracle and graph strategies.

The reference code below deliberately avoids the package (plain dicts and a
deque) so the tests compare against something written separately.
"""
from collections import deque

import numpy as np
import pytest
from hypothesis import strategies as st

from replpath import Graph
from replpath.auxgraph import AuxGraph

REF_INF = float("inf")


def ref_bfs(n, edges, s, banned=None, banned_set=()):
    """Hop distances from ``s`` skipping the pair ``banned`` and every pair in ``banned_set``."""
    adj = [[] for _ in range(n)]
    skip = {frozenset(e) for e in banned_set}
    if banned is not None:
        skip.add(frozenset(banned))
    for u, v in edges:
        if frozenset((u, v)) in skip:
            continue
        adj[u].append(v)
        adj[v].append(u)
    dist = [REF_INF] * n
    dist[s] = 0
    dq = deque([s])
    while dq:
        u = dq.popleft()
        for w in adj[u]:
            if dist[w] == REF_INF:
                dist[w] = dist[u] + 1
                dq.append(w)
    return dist


def ref_canonical_parent(n, edges, s):
    """BFS parent with the smallest-id rule, built level by level."""
    dist = ref_bfs(n, edges, s)
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    parent = [-1] * n
    for v in range(n):
        if v != s and dist[v] != REF_INF:
            parent[v] = min(u for u in nbrs[v] if dist[u] == dist[v] - 1)
    return dist, parent


def ref_path(parent, s, t):
    out = [t]
    while out[-1] != s:
        out.append(parent[out[-1]])
    return out[::-1]


def ref_replacement_rows(n, edges, s):
    """``{(t, frozenset(e)): dist}`` for every edge of every canonical path."""
    dist, parent = ref_canonical_parent(n, edges, s)
    cache = {}
    rows = {}
    for t in range(n):
        if t == s or dist[t] == REF_INF:
            continue
        p = ref_path(parent, s, t)
        for a, b in zip(p[:-1], p[1:]):
            key = frozenset((a, b))
            if key not in cache:
                cache[key] = ref_bfs(n, edges, s, banned=(a, b))
            rows[(t, key)] = cache[key][t]
    return rows


def ref_cuts(prio):
    """Indices kept by an ascending record walk from the front and from the back."""
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
    if cuts[-1] != len(prio) - 1:
        cuts.append(len(prio) - 1)
    return cuts


def interval_bypass_check(n, edges, priority):
    """Check the three-term bypass identity for every center source, target and path edge.

    Returns ``(checked, failures)``.  Every term is a plain BFS: through the
    left end center, through the right end center, or avoiding every edge of
    the interval that holds the failed edge.
    """
    plain = [ref_bfs(n, edges, u) for u in range(n)]
    per_edge = {}

    def cut(e, u):
        key = frozenset(e)
        if key not in per_edge:
            per_edge[key] = [ref_bfs(n, edges, w, banned=e) for w in range(n)]
        return per_edge[key][u]

    checked, failures = 0, []
    for s in range(n):
        if priority[s] < 0:
            continue
        dist, parent = ref_canonical_parent(n, edges, s)
        for r in range(n):
            if r == s or dist[r] == REF_INF:
                continue
            path = ref_path(parent, s, r)
            cuts = ref_cuts([priority[v] for v in path])
            for lo, nxt in zip(cuts[:-1], cuts[1:]):
                c1, c2 = path[lo], path[nxt]
                block = list(zip(path[lo:nxt], path[lo + 1:nxt + 1]))
                avoid = ref_bfs(n, edges, s, banned_set=block)[r]
                for e in block:
                    want = cut(e, s)[r]
                    got = min(plain[s][c1] + cut(e, c1)[r], cut(e, s)[c2] + plain[c2][r], avoid)
                    checked += 1
                    if got != want:
                        failures.append((s, r, e, want, got))
    return checked, failures


def random_connected(rng, n, extra_p):
    """Random spanning tree plus independent extra edges."""
    perm = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        j = int(rng.integers(0, i))
        a, b = int(perm[i]), int(perm[j])
        edges.add((min(a, b), max(a, b)))
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < extra_p
    for a, b in zip(iu[keep].tolist(), ju[keep].tolist()):
        edges.add((a, b))
    return Graph(n, sorted(edges))


@st.composite
def small_graphs(draw, min_n=2, max_n=14, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 3 * n))) if pairs else []
    edges = set(chosen)
    if connected:
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            a, b = order[i], order[j]
            edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges))


# Every auxiliary size check in the session is counted here; a firing check
# raises, so a green run means none fired.
AUX_CHECKS = {"checked": 0, "fired": 0}


@pytest.fixture(autouse=True, scope="session")
def _count_aux_checks():
    original = AuxGraph.check_size

    def counted(self, max_nodes, max_arcs, what):
        AUX_CHECKS["checked"] += 1
        try:
            original(self, max_nodes, max_arcs, what)
        except AssertionError:
            AUX_CHECKS["fired"] += 1
            raise

    AuxGraph.check_size = counted
    yield AUX_CHECKS
    AuxGraph.check_size = original
