import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from replpath import AlgoConfig, boolean_multiply, brute_force_rp, build_reduction_graph, run_ssrp
from replpath.bmm import format_matrix, padded_size, parse_matrix


def direct(A, B):
    return (A.astype(int) @ B.astype(int)) > 0


def brute_solver(g, sources, cfg):
    """Solver stand-in that answers every query by BFS, to test the decoding alone."""
    from replpath import ReplacementTable, bfs_tree

    table = ReplacementTable(g)
    for s in sources:
        tree = bfs_tree(g, s)
        table.add_source(tree)
        for t in tree.bfs_order[1:].tolist():
            path = tree.path_vertices(t)
            for a, b in zip(path[:-1], path[1:]):
                table.set(s, t, g.edge_id(a, b), brute_force_rp(g, s, t, (a, b)))
    return table


def test_matrix_text_round_trip():
    m = np.array([[1, 0, 1], [0, 0, 0], [1, 1, 0]], dtype=bool)
    text = format_matrix(m)
    assert text == "3\n101\n000\n110\n"
    assert np.array_equal(parse_matrix(text), m)


@pytest.mark.parametrize("text", ["", "2\n10\n", "2\n10\n1x\n", "x\n"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_matrix(text)


@pytest.mark.parametrize("n,sigma,expect", [(1, 1, (1, 1)), (5, 1, (9, 3)), (8, 2, (8, 2)), (8, 4, (16, 2)), (3, 4, (4, 1))])
def test_padded_size(n, sigma, expect):
    assert padded_size(n, sigma) == expect


def test_instance_shape_and_probes():
    rng = np.random.default_rng(0)
    A = rng.random((8, 8)) < 0.4
    B = rng.random((8, 8)) < 0.4
    inst = build_reduction_graph(A, B, sigma=2, i=1)
    q = 2
    assert len(inst.sources) == 2
    assert len(inst.probes) == 2 * q
    assert [p.expected for p in inst.probes] == [q + (j % q) + 3 for j in range(2 * q)]
    for pr in inst.probes:
        d = brute_force_rp(inst.graph, pr.source, int(inst.c_vertex[0]), pr.failed)
        want = direct(A, B)[pr.row, 0]
        assert (d == pr.expected) == want
        assert d >= pr.expected


def test_instance_rejects_unpadded():
    A = np.zeros((5, 5), dtype=bool)
    with pytest.raises(ValueError):
        build_reduction_graph(A, A, sigma=1, i=1)
    with pytest.raises(ValueError):
        build_reduction_graph(np.zeros((4, 4), dtype=bool), np.zeros((4, 4), dtype=bool), sigma=1, i=3)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7), st.sampled_from([1, 2, 4]), st.integers(0, 2**32 - 1))
def test_decoding_with_brute_solver(n, sigma, seed):
    rng = np.random.default_rng(seed)
    A = rng.random((n, n)) < 0.3
    B = rng.random((n, n)) < 0.3
    assert np.array_equal(boolean_multiply(A, B, sigma, solver=brute_solver), direct(A, B))


@pytest.mark.parametrize("sigma", [1, 2, 4])
def test_multiply_with_pipeline(sigma):
    rng = np.random.default_rng(sigma)
    for n in (2, 5, 8):
        A = rng.random((n, n)) < 0.35
        B = rng.random((n, n)) < 0.35
        assert np.array_equal(boolean_multiply(A, B, sigma, AlgoConfig(seed=n)), direct(A, B))


def test_single_source_solver_can_be_plugged():
    A = np.eye(3, dtype=bool)
    B = np.ones((3, 3), dtype=bool)

    def ssrp_solver(g, sources, cfg):
        (s,) = sources
        return run_ssrp(g, s, cfg)

    assert boolean_multiply(A, B, 1, solver=ssrp_solver).all()


def test_empty_and_mismatched():
    assert boolean_multiply(np.zeros((0, 0)), np.zeros((0, 0)), 1).shape == (0, 0)
    with pytest.raises(ValueError):
        boolean_multiply(np.zeros((2, 2)), np.zeros((3, 3)), 1)
