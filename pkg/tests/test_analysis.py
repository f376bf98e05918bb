from collections import Counter

import pytest

from e7kr.analysis.branching import (
    REFERENCE_LISTINGS, REFERENCE_TRIANGLE, a7_restrict_weight, adjoint_character,
    adjoint_indexed, build_adjoint_crystal, check_conjecture, check_two_tensor_characterization,
    conjecture_decomposition, conjecture_multiplicity, peel_decompose, triangle_entry,
    triangle_row,
)
from e7kr.analysis.compgraph import (
    G2_EDGES, G2_LOOP_FREE, G2_VERTICES, adjoint_composition_graph,
    e6_chain_edges_labelled, g2_edges_labelled, letter_composition_graph,
    x_chain_edges_labelled,
)
from e7kr.analysis.perfect import check_perfect, eps_phi_affine, tensor_square_connected, _tables
from e7kr.cartan import dim_E7, enumerate_level_weights, level
from e7kr.crystal_core import ResourceLimitError
from e7kr.rows import x_letter
from e7kr.tableaux import weight_character


# -- perfectness ----------------------------------------------------------------------

def test_eps_phi_at_the_top(kr1, kr2):
    for s, kr in ((1, kr1), (2, kr2)):
        top = (x_letter("x1"),) * s
        eps, phi = eps_phi_affine(kr, top)
        assert eps == (s, 0, 0, 0, 0, 0, 0, 0)
        assert phi == (0, 0, 0, 0, 0, 0, 0, s)


def test_levels_balance(kr2):
    for b in kr2.elements():
        eps, phi = eps_phi_affine(kr2, b)
        assert level(eps) == level(phi)


def test_minimal_elements_s1(kr1):
    mins = [b for b in kr1.elements() if level(eps_phi_affine(kr1, b)[0]) == 1]
    assert len(mins) == 2


@pytest.mark.parametrize("s, size", [(1, 2), (2, 6)])
def test_check_perfect(s, size):
    r = check_perfect(s)
    assert r.verdict
    assert len(r.min_elements) == size
    assert r.connected_square is True


def test_check_perfect_s3_skips_square():
    r = check_perfect(3)
    assert r.verdict
    assert len(r.min_elements) == len(enumerate_level_weights(3))
    assert r.connected_square is None and "budget" in r.square_notice


def test_square_connectivity_detects_missing_colors(kr1):
    eps, phi, fidx = _tables(kr1, kr1.elements())
    assert tensor_square_connected(eps, phi, fidx)
    # without color 0 the classical square B(w7)^2 has several components
    assert not tensor_square_connected(eps[1:], phi[1:], fidx[1:])


# -- adjoint crystal and branching ---------------------------------------------------

def test_adjoint_sizes():
    assert len(build_adjoint_crystal(0)) == 1
    g1 = build_adjoint_crystal(1)
    assert len(g1) == 133
    assert g1.axiom_violations() == []
    assert len(build_adjoint_crystal(2)) == 7371
    assert sum(adjoint_character(3).values()) == dim_E7((3, 0, 0, 0, 0, 0, 0))
    with pytest.raises(ResourceLimitError):
        build_adjoint_crystal(4)


def test_adjoint_zero_weight_multiplicity():
    assert adjoint_character(1)[(0,) * 7] == 7


def test_a7_restrict_weight():
    assert a7_restrict_weight((0, 0, 0, 0, 0, 0, 1)) == (1, 0, 0, 0, 0, 0, -1)
    assert a7_restrict_weight((0,) * 7) == (0,) * 7
    assert a7_restrict_weight((0, 1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 0, -2)


def test_restricted_adjoint_character_peels_to_listing():
    total = Counter()
    for k in (0, 1):
        for w, m in adjoint_character(k).items():
            total[a7_restrict_weight(w)] += m
    assert peel_decompose(total) == REFERENCE_LISTINGS[1]


def test_peel_single_fundamental():
    assert peel_decompose(weight_character((1,), 7)) == {(1, 0, 0, 0, 0, 0, 0): 1}


def test_triangle_rows():
    for s, row in REFERENCE_TRIANGLE.items():
        assert triangle_row(s) == row
    assert triangle_entry(2, 4) == 4
    assert triangle_entry(4, 9) == 9
    assert triangle_entry(0, 0) == 1


def test_conjecture_multiplicity_indexing():
    assert conjecture_multiplicity(0, 0, 0, 0, 0) == 1
    assert conjecture_multiplicity(0, 0, 0, 2, 4) == 4
    assert conjecture_multiplicity(0, 0, 0, 4, 9, printed=True) == 9
    assert conjecture_multiplicity(0, 0, 0, 4, 9) == 11
    assert conjecture_multiplicity(1, 1, 1, 0, 5) == 0
    assert conjecture_multiplicity(0, 0, 0, 0, 2, printed=True) == 1
    assert conjecture_multiplicity(0, 0, 0, 0, 2) == 2
    with pytest.raises(ValueError):
        conjecture_multiplicity(-1, 0, 0, 0, 1)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_check_conjecture(s):
    r = check_conjecture(s)
    assert r.match
    assert r.reference_match
    assert r.sigma_fixed
    assert r.printed_match == (s <= 1)
    assert len(r.multiplicities) == {1: 3, 2: 7, 3: 14}[s]


def test_conjecture_decomposition_dimensions():
    from e7kr.cartan import dim_A
    for s in range(4):
        total = sum(dim_A(w) * m for w, m in conjecture_decomposition(s).items())
        assert total == sum(dim_E7((k, 0, 0, 0, 0, 0, 0)) for k in range(s + 1))


def test_two_tensor_characterization():
    r = check_two_tensor_characterization()
    assert r.pairs == 17689
    assert r.members == 7371
    assert r.verdict
    assert r.diagonal_nonmembers == 7
    assert not r.literal_verdict
    A = adjoint_indexed()
    assert len(A) == 133


# -- composition graphs --------------------------------------------------------------

def test_g2_of_w1_matches_the_drawing():
    G = adjoint_composition_graph(2)
    assert len(G.vertices) == 22
    assert len(G2_EDGES) == 29
    assert G.labelled_edges() == g2_edges_labelled()
    assert [G.label(v) for v in G.loop_free] == [G2_VERTICES[v][0] for v in G2_LOOP_FREE]
    compact = {G.label(v): G.compact[v] for v in G.vertices}
    for label, short in G2_VERTICES.values():
        assert compact[label] == short


def test_letter_graph_for_i02():
    G = letter_composition_graph(2)
    assert len(G.vertices) == 8
    assert G.labelled_edges() == x_chain_edges_labelled()
    assert G.loop_free == []


def test_letter_graph_for_i07():
    G = letter_composition_graph(7)
    assert len(G.vertices) == 4
    assert G.labelled_edges() == e6_chain_edges_labelled()
    assert G.loop_free == []


def test_letter_graph_for_node_1_is_not_the_x_diagram():
    G = letter_composition_graph(1)
    assert G.labelled_edges() != x_chain_edges_labelled()


def test_composition_graph_dot():
    text = letter_composition_graph(7).to_dot()
    assert text.startswith("digraph")
    assert text.count("->") == 3 + 4
