import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from seidel_extremal.extremal import hnm_variants
from seidel_extremal.graph import Graph, VertexOutOfRangeError, complete_bipartite, empty_graph, make_graph, star_union
from seidel_extremal.spectra import (
    negative_term_count,
    negative_term_count_direct,
    normalize_sign,
    principal_eigenvector,
    quadratic_form,
    seidel_index,
    seidel_indices,
    seidel_matrix,
    seidel_spectra,
    seidel_spectrum,
    seidel_stack,
    switch,
)

SQRT3 = math.sqrt(3)


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    return Graph(n, draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


def test_seidel_matrix_examples():
    assert seidel_matrix(empty_graph(3)).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert seidel_matrix(make_graph(2, [(0, 1)])).tolist() == [[0, -1], [-1, 0]]
    s = seidel_matrix(star_union(6, 1))
    assert s.sum() == 26
    assert (s == -1).sum() == 2


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_seidel_matrix_is_j_minus_i_minus_2a(g):
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1
    assert np.array_equal(seidel_matrix(g), np.ones((g.n, g.n)) - np.eye(g.n) - 2 * a)


def test_spectrum_examples():
    w = seidel_spectrum(empty_graph(5)).eigenvalues
    assert np.allclose(w, [4, -1, -1, -1, -1], atol=1e-12)
    w = seidel_spectrum(star_union(6, 1)).eigenvalues
    assert np.allclose(w, [1 + 2 * SQRT3, 1, -1, -1, -1, 1 - 2 * SQRT3], atol=1e-12)


def test_index_examples():
    assert seidel_index(empty_graph(7)) == pytest.approx(6, abs=1e-12)
    assert seidel_index(star_union(5, 2)) == pytest.approx(3, abs=1e-12)
    assert seidel_index(star_union(7, 1)) == pytest.approx((3 + math.sqrt(65)) / 2, abs=1e-12)


def test_batched_spectra_match_single(rng):
    gs = [Graph(n, int(rng.integers(0, 1 << (n * (n - 1) // 2)))) for n in (3, 5, 3, 6, 5, 1) for _ in range(4)]
    batched = seidel_spectra(gs)
    for g, w in zip(gs, batched):
        assert np.allclose(w, np.linalg.eigvalsh(seidel_matrix(g))[::-1], atol=1e-11)
    assert np.allclose(seidel_indices(gs), [w[0] for w in batched])
    with pytest.raises(ValueError):
        seidel_stack([empty_graph(3), empty_graph(4)])


def test_principal_eigenvector_examples():
    pv = principal_eigenvector(empty_graph(5))
    assert np.allclose(pv.vector, np.ones(5) / math.sqrt(5), atol=1e-12)
    assert pv.simple
    pv = principal_eigenvector(star_union(7, 2))
    assert pv.simple and np.all(pv.vector > 1e-9)
    pv = principal_eigenvector(star_union(7, 3))
    assert abs(pv.vector[0]) <= 1e-9
    assert np.all(pv.vector[1:] > 1e-9)


def test_principal_eigenvector_flags_degeneracy():
    g = complete_bipartite(2, 4)  # switches to the empty graph: index 3, simple
    assert principal_eigenvector(g).simple
    # K_4 has S = -(J - I): index 1 with multiplicity 3
    k4 = make_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    pv = principal_eigenvector(k4)
    assert not pv.simple
    assert pv.eigenvalue == pytest.approx(1, abs=1e-12)


def test_normalize_sign():
    assert normalize_sign(np.array([0.1, -0.9, 0.3])).tolist() == [-0.1, 0.9, -0.3]
    assert normalize_sign(np.array([-0.5, 0.5])).tolist() == [0.5, -0.5]


def test_switch_examples(rng):
    g = Graph(6, int(rng.integers(0, 1 << 15)))
    assert switch(g, []) == g
    assert switch(g, range(6)) == g
    # K_{1,5} minus one edge, switched at its centre, is S_{6,1}
    h64 = make_graph(6, [(0, j) for j in range(2, 6)])
    s = switch(h64, [0])
    assert s.degree_sequence() == star_union(6, 1).degree_sequence()
    assert s.m == 1
    with pytest.raises(VertexOutOfRangeError):
        switch(g, [6])


def test_hnm_switches_to_a_star():
    for n in range(3, 10):
        for m in range(n * n // 4 + 1):
            for v in hnm_variants(n, m):
                s = switch(v.graph, v.part)
                expected = {(min(v.center, u), max(v.center, u)) for u in v.leaves} if v.leaves else set()
                assert set(s.edges) == expected


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2), st.data())
def test_switching_is_a_signature_similarity(g, data):
    u = data.draw(st.sets(st.integers(0, g.n - 1)))
    d = np.diag([-1.0 if v in u else 1.0 for v in range(g.n)])
    assert np.array_equal(seidel_matrix(switch(g, u)), d @ seidel_matrix(g) @ d)
    assert switch(switch(g, u), u) == g


def test_quadratic_form_examples():
    x = np.array([1, 1]) / math.sqrt(2)
    assert quadratic_form(make_graph(2, [(0, 1)]), x) == pytest.approx(-1)
    x = np.array([0.5, -0.5, 0.5, 0.5])
    assert quadratic_form(empty_graph(4), x) == pytest.approx(x.sum() ** 2 - 1)
    pv = principal_eigenvector(star_union(6, 1))
    assert quadratic_form(star_union(6, 1), pv.vector) == pytest.approx(1 + 2 * SQRT3, abs=1e-12)
    with pytest.raises(ValueError):
        quadratic_form(empty_graph(3), [1, 2])


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_quadratic_form_matches_matrix(g, data):
    x = np.array(data.draw(st.lists(st.floats(-5, 5), min_size=g.n, max_size=g.n)))
    assert quadratic_form(g, x) == pytest.approx(x @ seidel_matrix(g) @ x, abs=1e-9)


def test_negative_term_count_examples():
    assert negative_term_count(empty_graph(5), np.ones(5)) == 0
    assert negative_term_count(make_graph(2, [(0, 1)]), [1, 1]) == 1
    x = np.array([-1, -1, 1, 1, 1, 1.0])
    assert negative_term_count(complete_bipartite(2, 6), x) == 0
    assert negative_term_count_direct(complete_bipartite(2, 6), x) == 0
    with pytest.raises(ValueError):
        negative_term_count(empty_graph(3), [1, 0, 1])


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_negative_term_count_matches_direct_scan(g, data):
    signs = data.draw(st.lists(st.sampled_from([-1.0, 1.0]), min_size=g.n, max_size=g.n))
    mags = data.draw(st.lists(st.floats(0.01, 3), min_size=g.n, max_size=g.n))
    x = np.array(signs) * np.array(mags)
    assert negative_term_count(g, x) == negative_term_count_direct(g, x)
