import json
import pathlib

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import REF_INF, ref_bfs, ref_canonical_parent, ref_path, small_graphs
from replpath import INF, Graph, pair_replacement_paths
from replpath.generators import cycle, path
from replpath.pair_rp import range_min_paint

DATA = pathlib.Path(__file__).parent / "data" / "derived_rp.json"


def test_range_min_paint_matches_loop():
    rng = np.random.default_rng(0)
    for length in (1, 2, 3, 7, 16, 33):
        lo = rng.integers(0, length, size=20)
        hi = np.minimum(lo + rng.integers(0, length, size=20), length - 1)
        val = rng.integers(0, 100, size=20)
        want = [min([int(v) for a, b, v in zip(lo, hi, val) if a <= j <= b], default=INF) for j in range(length)]
        assert range_min_paint(length, lo, hi, val).tolist() == want


@pytest.mark.parametrize("n", [3, 4, 5, 9, 17, 32])
def test_cycle_closed_form(n):
    g = cycle(n)
    for t in range(1, n):
        res = pair_replacement_paths(g, 0, t)
        assert res.dist.tolist() == [n - len(res.path) + 1] * (len(res.path) - 1)


def test_bridges_give_sentinel():
    res = pair_replacement_paths(path(6), 1, 5)
    assert res.dist.tolist() == [INF] * 4
    assert [e for e, _ in res.entries] == [(1, 2), (2, 3), (3, 4), (4, 5)]


def test_unreachable_target_rejected():
    with pytest.raises(ValueError):
        pair_replacement_paths(Graph(3, [(0, 1)]), 0, 2)


def test_frozen_derived_values():
    for case in json.loads(DATA.read_text()):
        g = Graph(case["n"], case["edges"])
        got = {}
        for s in case["sources"]:
            for t in range(g.n):
                if t == s:
                    continue
                res = pair_replacement_paths(g, s, t)
                for (a, b), d in res.entries:
                    got[(s, t, min(a, b), max(a, b))] = None if d >= INF else d
        want = {(s, t, a, b): d for s, t, a, b, d in case["rows"]}
        assert got == want


@settings(max_examples=200, deadline=None)
@given(small_graphs(min_n=2, max_n=14), st.data())
def test_matches_reference_oracle(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    edges = g.edges.tolist()
    dist, parent = ref_canonical_parent(g.n, edges, s)
    reach = [t for t in range(g.n) if t != s and dist[t] != REF_INF]
    if not reach:
        return
    t = data.draw(st.sampled_from(reach))
    res = pair_replacement_paths(g, s, t)
    assert res.path.tolist() == ref_path(parent, s, t)
    for (a, b), d in res.entries:
        want = ref_bfs(g.n, edges, s, banned=(a, b))[t]
        assert (REF_INF if d >= INF else d) == want
        # a replacement is never shorter than the original distance
        assert d >= dist[t]
