import json
import random

import pytest
from hypothesis import given, strategies as st

from tutte_galois import matroid as mat
from tutte_galois.corpus import builtin_corpus
from tutte_galois.graphs import SimpleGraph, cycle, cycle_matroid, enumerate_connected, is_biconnected
from tutte_galois.matroid import (BasesMatroid, ElementStatus, GraphicMatroid, LinearMatroid,
                                  MatroidError, UniformMatroid)

import oracles


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=9):
    n = draw(st.integers(1, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return GraphicMatroid(n, tuple(edges))


@st.composite
def integer_matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 7))
    entries = st.integers(-3, 3)
    return tuple(tuple(draw(entries) for _ in range(cols)) for _ in range(rows))


def all_ranks(m):
    return [m.rank(a) for a in range(1 << m.size)]


class TestRank:
    def test_examples(self):
        assert cycle_matroid(cycle(3)).rank(0b111) == 2
        assert UniformMatroid(2, 4).rank([0, 1, 3]) == 2
        assert LinearMatroid(((1, 0, 1), (0, 1, 1))).rank(0b111) == 2

    @given(multigraphs())
    def test_graphic_matches_component_count(self, m):
        for a in range(1 << m.size):
            assert m.rank(a) == oracles.graph_rank(m.vertices, m.edges, a)

    @given(integer_matrices())
    def test_linear_matches_rational_elimination(self, matrix):
        m = LinearMatroid(matrix)
        for a in range(1 << m.size):
            cols = [c for c in range(m.size) if a >> c & 1]
            assert m.rank(a) == oracles.matrix_rank(matrix, cols)

    @given(st.integers(0, 6).flatmap(lambda m: st.tuples(st.integers(0, m), st.just(m))))
    def test_uniform(self, rm):
        r, m = rm
        u = UniformMatroid(r, m)
        assert all(u.rank(a) == min(bin(a).count("1"), r) for a in range(1 << m))

    def test_rank_table_agrees_with_rank(self):
        for _, m in builtin_corpus():
            table = m.rank_table
            assert [int(x) for x in table] == [m._rank(a) for a in range(1 << m.size)]

    def test_bases_from_graphic_bases(self):
        for n in range(2, 5):
            for g in enumerate_connected(n):
                m = cycle_matroid(g)
                r = m.total_rank
                bases = [a for a in range(1 << m.size) if bin(a).count("1") == r and m.rank(a) == r]
                assert all_ranks(BasesMatroid(m.size, tuple(bases))) == all_ranks(m)

    def test_out_of_ground_set(self):
        with pytest.raises(MatroidError):
            UniformMatroid(1, 3).rank([3])

    def test_bad_constructions(self):
        with pytest.raises(MatroidError):
            UniformMatroid(3, 2)
        with pytest.raises(MatroidError):
            GraphicMatroid(2, ((0, 2),))
        with pytest.raises(MatroidError):
            LinearMatroid(((1, 2), (3,)))
        with pytest.raises(MatroidError):
            BasesMatroid.from_lists(3, [[0], [1, 2]])
        with pytest.raises(MatroidError):
            UniformMatroid(1, 25)


class TestRankAxioms:
    @pytest.mark.parametrize("name,m", [(n, m) for n, m in builtin_corpus() if m.size <= 10])
    def test_axioms_exhaustive(self, name, m):
        r = [int(x) for x in m.rank_table]
        full = m.full_mask
        assert r[0] == 0
        for a in range(full + 1):
            for e in range(m.size):
                b = a | 1 << e
                assert r[a] <= r[b] <= r[a] + 1
        if m.size <= 8:
            for a in range(full + 1):
                for b in range(full + 1):
                    assert r[a | b] + r[a & b] <= r[a] + r[b]
        else:
            rng = random.Random(name)
            for _ in range(20000):
                a, b = rng.randrange(full + 1), rng.randrange(full + 1)
                assert r[a | b] + r[a & b] <= r[a] + r[b]


class TestMinors:
    def test_contract_edge_of_triangle(self):
        c = mat.contract(cycle_matroid(cycle(3)), 0)
        assert c.size == 2
        assert all_ranks(c) == [0, 1, 1, 1]

    def test_delete_edge_of_triangle(self):
        d = mat.delete(cycle_matroid(cycle(3)), 0)
        assert d.rank(0b11) == 2

    def test_trivial_minor(self):
        m = UniformMatroid(2, 4)
        assert all_ranks(mat.minor(m)) == all_ranks(m)

    def test_overlap_rejected(self):
        with pytest.raises(MatroidError):
            mat.minor(UniformMatroid(2, 4), 0b1, 0b11)

    @given(multigraphs(max_vertices=5, max_edges=7), st.data())
    def test_rank_formula_and_flattening(self, m, data):
        labels = list(range(m.size))
        roles = data.draw(st.lists(st.sampled_from("kdc"), min_size=m.size, max_size=m.size))
        d = mat.mask_of(e for e in labels if roles[e] == "d")
        c = mat.mask_of(e for e in labels if roles[e] == "c")
        view = mat.minor(m, d, c)
        keep = [e for e in labels if roles[e] == "k"]
        for a in range(1 << view.size):
            lifted = mat.mask_of(keep[i] for i in range(view.size) if a >> i & 1)
            assert view.rank(a) == m.rank(lifted | c) - m.rank(c)
        # deleting then contracting one at a time ends at the same view
        step = m
        for e in sorted(labels, reverse=True):
            if roles[e] == "d":
                step = mat.delete(step, e)
            elif roles[e] == "c":
                step = mat.contract(step, e)
        assert isinstance(step, mat.MinorMatroid) or not (d or c)
        if d or c:
            assert step.base is m
            assert (step.deleted, step.contracted) == (d, c)
            assert all_ranks(step) == all_ranks(view)


class TestElementStatus:
    def test_examples(self):
        assert mat.element_status(GraphicMatroid(1, ((0, 0),)), 0) is ElementStatus.LOOP
        assert mat.element_status(GraphicMatroid(2, ((0, 1),)), 0) is ElementStatus.COLOOP
        tri = cycle_matroid(cycle(3))
        assert all(mat.element_status(tri, e) is ElementStatus.REGULAR for e in range(3))


class TestConnectivity:
    def test_examples(self):
        assert mat.is_connected(cycle_matroid(cycle(3)))
        assert not mat.is_connected(UniformMatroid(2, 2))
        assert mat.is_connected(UniformMatroid(1, 2))

    def test_degenerate_conventions(self):
        assert not mat.is_connected(GraphicMatroid(1, ((0, 0),)))
        assert not mat.is_connected(UniformMatroid(0, 3))
        assert mat.is_connected(GraphicMatroid(2, ((0, 1),)))
        assert not mat.is_connected(UniformMatroid(0, 0))

    @given(multigraphs(max_vertices=5, max_edges=7))
    def test_matches_bipartition_scan(self, m):
        if m.size == 0:
            return
        r = m.total_rank
        separator = any(m.rank(a) + m.rank(m.full_mask ^ a) == r for a in range(1, m.full_mask))
        assert mat.is_connected(m) == (r > 0 and not separator)

    def test_biconnected_iff_connected_matroid(self):
        for n in range(3, 7):
            for g in enumerate_connected(n):
                assert is_biconnected(g) == mat.is_connected(cycle_matroid(g)), g

    def test_corpus_minor_properties(self):
        for _, m in builtin_corpus():
            if m.size < 2 or not mat.is_connected(m):
                continue
            for e in range(m.size):
                d, c = mat.delete(m, e), mat.contract(m, e)
                assert d.total_rank == m.total_rank
                assert c.total_rank == m.total_rank - 1
                assert mat.is_connected(d) or mat.is_connected(c)


class TestCircuits:
    def test_examples(self):
        assert mat.circuits(cycle_matroid(cycle(3))) == [0b111]
        assert mat.circuits(UniformMatroid(2, 4)) == [0b0111, 0b1011, 0b1101, 0b1110]
        assert mat.circuits(UniformMatroid(3, 3)) == []

    @given(multigraphs(max_vertices=5, max_edges=7))
    def test_minimal_dependent(self, m):
        found = mat.circuits(m)
        dependent = [a for a in range(1 << m.size) if m.rank(a) < bin(a).count("1")]
        minimal = [a for a in dependent if not any(b != a and b & a == b for b in dependent)]
        assert found == sorted(minimal, key=lambda a: (bin(a).count("1"), a))


class TestDirectSum:
    def test_two_coloops(self):
        s = mat.direct_sum(UniformMatroid(1, 1), UniformMatroid(1, 1))
        assert s.total_rank == 2
        assert not mat.is_connected(s)

    def test_rank_adds(self):
        a, b = cycle_matroid(cycle(3)), UniformMatroid(2, 4)
        s = mat.direct_sum(a, b)
        for x in range(1 << s.size):
            assert s.rank(x) == a.rank(x & 0b111) + b.rank(x >> 3)

    def test_size_cap(self):
        with pytest.raises(MatroidError):
            mat.direct_sum(UniformMatroid(1, 13), UniformMatroid(1, 12))


class TestJson:
    def test_all_schemas(self):
        docs = [
            {"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
            {"type": "uniform", "rank": 2, "size": 3},
            {"type": "linear", "matrix": [[1, 0, 1], [0, 1, 1]]},
            {"type": "bases", "size": 3, "bases": [[0, 1], [0, 2], [1, 2]]},
        ]
        tables = [all_ranks(mat.from_json(json.dumps(d))) for d in docs]
        assert all(t == tables[0] for t in tables)

    @pytest.mark.parametrize("doc", [
        {"type": "graphic", "vertices": 2},
        {"type": "matrix"},
        [1, 2],
        {"type": "uniform", "rank": "x", "size": 2},
    ])
    def test_schema_violations(self, doc):
        with pytest.raises((MatroidError, ValueError)):
            mat.from_json(doc)


def test_fraction_free_rank_against_rationals():
    rng = random.Random(7)
    for _ in range(200):
        rows = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(rng.randint(1, 5))]
        assert mat.fraction_free_rank(rows) == oracles.matrix_rank(rows, range(5))


def test_simple_graph_rejects_loops():
    with pytest.raises(ValueError):
        SimpleGraph(2, ((0, 0),))
