"""Acceptance criteria 1-8; each prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or ``pytest -m acceptance``.
"""
import json
import math
import pathlib
import time

import numpy as np
import pytest

from conftest import AUX_CHECKS, interval_bypass_check, random_connected
from replpath import (
    INF,
    AlgoConfig,
    Counters,
    Graph,
    boolean_multiply,
    bfs_tree,
    brute_force_rp,
    pair_replacement_paths,
    run_msrp,
    run_ssrp,
    sample_centers,
    sample_landmarks,
    verify_table,
)
from replpath.cli import naive_baseline
from replpath.generators import cycle, erdos_renyi, erdos_renyi_m, path

pytestmark = pytest.mark.acceptance

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def report(capsys):
    def emit(num, title, ok, detail, seconds, budget):
        verdict = "PASS" if ok and seconds < budget else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {num}] {verdict} {title}: {detail} ({seconds:.1f}s, budget {budget}s)")
        assert ok, detail
        assert seconds < budget, f"took {seconds:.1f}s"

    return emit


def instance_graph(rng, n):
    """Alternate sparse tree-plus-chords graphs and denser G(n, p)."""
    if rng.random() < 0.5:
        return random_connected(rng, n, rng.uniform(0.0, 4.0 / n))
    return erdos_renyi(n, min(1.0, rng.uniform(1.5, 4.0) * math.log(n) / n), seed=int(rng.integers(2**32)))


def test_criterion_1_ssrp_exact(report):
    start = time.perf_counter()
    rng = np.random.default_rng(1001)
    checked = mismatches = missing = 0
    for i in range(100):
        n = int(rng.integers(10, 61))
        g = instance_graph(rng, n)
        s = int(rng.integers(n))
        table = run_ssrp(g, s, AlgoConfig(seed=i))
        for _, t, eid, d in table.records():
            checked += 1
            mismatches += d != brute_force_rp(g, s, t, eid)
        missing += len(verify_table(g, [s], table).missing) if i % 10 == 0 else 0
    ok = mismatches == 0 and missing == 0 and checked > 0
    report(1, "SSRP equals brute force", ok, f"{checked} triples, {mismatches} mismatches, {missing} unkeyed",
           time.perf_counter() - start, 60)


def test_criterion_2_msrp_exact(report):
    start = time.perf_counter()
    rng = np.random.default_rng(2002)
    checked = mismatches = missing = 0
    identical = True
    for i in range(100):
        n = int(rng.integers(10, 51))
        g = instance_graph(rng, n)
        sigma = [1, 2, math.ceil(math.sqrt(n)), n][i % 4]
        srcs = sorted(rng.choice(n, size=sigma, replace=False).tolist())
        cfg = AlgoConfig(seed=i)
        table = run_msrp(g, srcs, cfg)
        rep = verify_table(g, srcs, table, cfg)
        checked += rep.checked
        mismatches += len(rep.mismatches)
        missing += len(rep.missing)
        if sigma == 1:
            identical &= table == run_ssrp(g, srcs[0], cfg)
    ok = mismatches == 0 and missing == 0 and identical
    report(2, "MSRP equals brute force", ok,
           f"{checked} triples, {mismatches} mismatches, {missing} unkeyed, sigma=1 identical to SSRP: {identical}",
           time.perf_counter() - start, 180)


def test_criterion_3_interval_bypass(report):
    start = time.perf_counter()
    rng = np.random.default_rng(3003)
    checked = 0
    failures = []
    for i in range(50):
        n = int(rng.integers(8, 31))
        g = instance_graph(rng, n)
        # c_sample = 1 keeps centers sparse so intervals span several edges
        centers = sample_centers(g, [int(rng.integers(n))], AlgoConfig(seed=i, c_sample=1.0))
        c, f = interval_bypass_check(n, g.edges.tolist(), centers.priority.tolist())
        checked += c
        failures += f
    report(3, "three-term interval bypass identity", not failures and checked > 0,
           f"{checked} (s, r, e) triples, {len(failures)} violations", time.perf_counter() - start, 120)


def test_criterion_4_pair_routine(report):
    start = time.perf_counter()
    bad = 0
    checked = 0
    for n in range(3, 65):
        g = cycle(n)
        for s in {0, n // 3}:
            tree = bfs_tree(g, s)
            for t in range(n):
                if t == s:
                    continue
                res = pair_replacement_paths(g, s, t, tree)
                want = n - (len(res.path) - 1)
                checked += len(res.dist)
                bad += int((res.dist != want).sum())
    for n in (2, 10, 64):
        g = path(n)
        for t in range(1, n):
            res = pair_replacement_paths(g, 0, t)
            checked += len(res.dist)
            bad += int((res.dist != INF).sum())
    # a 10-cycle with a tail 9-10-...-15: tail edges are bridges, cycle edges detour
    g = Graph(16, [(i, (i + 1) % 10) for i in range(10)] + [(i, i + 1) for i in range(9, 15)])
    res = pair_replacement_paths(g, 0, 15)
    want = [10 - 1 + 6] + [INF] * 6
    checked += len(res.dist)
    bad += int((res.dist != np.array(want)).sum())
    report(4, "cycles give n - d, bridges give the sentinel", bad == 0,
           f"{checked} path edges, {bad} wrong", time.perf_counter() - start, 5)


def test_criterion_5_bmm(report):
    start = time.perf_counter()
    rng = np.random.default_rng(5005)
    wrong = runs = 0
    for i in range(50):
        n = int(rng.integers(1, 9))
        density = rng.uniform(0.1, 0.6)
        A = rng.random((n, n)) < density
        B = rng.random((n, n)) < density
        want = (A.astype(int) @ B.astype(int)) > 0
        for sigma in (1, 2, 4):
            runs += 1
            wrong += not np.array_equal(boolean_multiply(A, B, sigma, AlgoConfig(seed=i)), want)
    report(5, "Boolean product through replacement distances", wrong == 0,
           f"{runs} products, {wrong} wrong", time.perf_counter() - start, 30)


def test_criterion_6_landmark_set_size(report):
    start = time.perf_counter()
    n = 10_000
    g = Graph(n, [])  # sampling only looks at the vertex count
    worst = 0.0
    over = 0
    for sigma in (1, 4, 16):
        bound = 32 * math.sqrt(n * sigma) * math.log2(n)
        srcs = list(range(sigma))
        for seed in range(50):
            size = len(sample_landmarks(g, srcs, AlgoConfig(seed=seed)).union)
            worst = max(worst, size / bound)
            over += size > bound
    report(6, "landmark set within 32 sqrt(n sigma) log2 n", over == 0,
           f"150 trials, {over} over the bound, largest |L|/bound = {worst:.3f}", time.perf_counter() - start, 30)


def test_criterion_7_scaling(report):
    cal = json.loads((DATA / "calibration.json").read_text())
    c = cal["far_work_constant"]
    inst = cal["instance"]
    g = erdos_renyi_m(inst["n"], inst["m"], seed=inst["seed"])
    n = g.n
    limit = c * n * math.log2(n)
    lines = []
    worst_seconds = 0.0
    ok = True
    for label, cfg in (("default", AlgoConfig(seed=0)), ("near<1", AlgoConfig(seed=0, threshold_override=1))):
        counters = Counters()
        start = time.perf_counter()
        run_ssrp(g, inst["source"], cfg, counters)
        secs = time.perf_counter() - start
        worst_seconds = max(worst_seconds, secs)
        per_target = max(counters.far_work_by_target.values(), default=0)
        ok &= per_target <= limit
        lines.append(f"{label}: {secs:.2f}s, max far work/target {per_target} <= {limit:.0f}")
    base_secs, runs = naive_baseline(g, [inst["source"]])
    lines.append(f"naive baseline {base_secs:.2f}s over {runs} BFS runs")
    report(7, f"n={n} m={g.m} scaling, c={c}", ok, "; ".join(lines), worst_seconds, 30)


def test_criterion_8_aux_bounds(report):
    start = time.perf_counter()
    # one more mixed sweep so the count is non-trivial even when run alone
    rng = np.random.default_rng(8008)
    for i in range(10):
        n = int(rng.integers(20, 45))
        g = instance_graph(rng, n)
        run_msrp(g, sorted(rng.choice(n, size=int(rng.integers(2, 6)), replace=False).tolist()), AlgoConfig(seed=i))
        run_ssrp(g, 0, AlgoConfig(seed=i, threshold_override=2))
    ok = AUX_CHECKS["fired"] == 0 and AUX_CHECKS["checked"] > 0
    report(8, "auxiliary graph size bounds never exceeded", ok,
           f"{AUX_CHECKS['checked']} size checks so far in this session, {AUX_CHECKS['fired']} fired",
           time.perf_counter() - start, 120)
