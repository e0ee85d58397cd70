import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tutte_galois import _pykernels, kernels

import oracles

compiled = pytest.importorskip("tutte_galois._ckernels")
BACKENDS = [_pykernels, compiled]


@st.composite
def edge_lists(draw):
    n = draw(st.integers(1, 7))
    return n, draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=10))


@given(edge_lists())
def test_rank_tables_agree_with_oracle(data):
    n, edges = data
    py = _pykernels.graphic_rank_table(n, edges)
    c = np.asarray(compiled.graphic_rank_table(n, edges))
    assert py.dtype == np.uint8
    assert np.array_equal(py, c)
    for mask in range(0, 1 << len(edges), max(1, (1 << len(edges)) // 64)):
        assert py[mask] == oracles.graph_rank(n, edges, mask)


@pytest.mark.parametrize("m", [13, 16])
def test_rank_tables_agree_past_block_size(m):
    # more edges than the compiled kernel's label-propagation block
    rng = np.random.default_rng(m)
    edges = [tuple(int(x) for x in rng.integers(0, 8, size=2)) for _ in range(m)]
    py = _pykernels.graphic_rank_table(8, edges)
    assert np.array_equal(py, np.asarray(compiled.graphic_rank_table(8, edges)))
    for mask in rng.integers(0, 1 << m, size=200):
        assert py[mask] == oracles.graph_rank(8, edges, int(mask))


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_reps_agree(n):
    for d in range(0, n):
        assert list(_pykernels.canonical_reps(n, d)) == list(compiled.canonical_reps(n, d))


@pytest.mark.parametrize("n", range(1, 6))
def test_predicates_and_forms_agree(n):
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        for kind in ("connected", "biconnected"):
            assert _pykernels.graph_predicate(n, mask, kind) == compiled.graph_predicate(n, mask, kind)
        assert _pykernels.canonical_form_max(n, mask) == compiled.canonical_form_max(n, mask)


@pytest.mark.parametrize("n", range(3, 6))
def test_oracle_forms_agree(n):
    for kind in ("connected", "biconnected"):
        assert list(_pykernels.oracle_forms(n, kind)) == list(compiled.oracle_forms(n, kind))


@pytest.mark.parametrize("backend", BACKENDS, ids=["python", "compiled"])
def test_graph_counts(backend):
    # unlabelled graphs on n vertices: 1, 2, 4, 11, 34, 156
    assert [len(backend.canonical_reps(n, 0)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


@pytest.mark.parametrize("backend", BACKENDS, ids=["python", "compiled"])
def test_limits(backend):
    with pytest.raises(ValueError):
        backend.graphic_rank_table(2, [(0, 1)] * 25)
    with pytest.raises(ValueError):
        backend.canonical_reps(9, 0)


def _backend_in_subprocess(value):
    env = dict(os.environ)
    if value is None:
        env.pop("TGL_PURE_PYTHON", None)
    else:
        env["TGL_PURE_PYTHON"] = value
    out = subprocess.run([sys.executable, "-c", "import tutte_galois.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    assert _backend_in_subprocess("1") == "python"
    assert _backend_in_subprocess("0") == "compiled"
    assert _backend_in_subprocess(None) == "compiled"
