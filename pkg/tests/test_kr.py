import random

import pytest

from e7kr.cartan import AFFINE_TWIST, E_TO_A6, I, I02, dim_A, level
from e7kr.kr import (
    KRCrystal, PhiAutomorphism, a6_components, a7_components, a7_weight,
    chain_counts, e6_decomposition, observed_a7_components, params_from_mu,
    phi_automorphism, phi_via_sigma, printed_phi_report, psi_by_jdt,
)
from e7kr.rows import CompParams, RowCrystal, classify_i02_highest, x_letter


def row_of(*names):
    return tuple(sorted(x_letter(n) for n in names))


def test_params_from_mu_examples():
    assert params_from_mu((0, 1, 0, 0, 0, 0), 1) == CompParams(m6=1)
    assert params_from_mu((0,) * 6, 2) == CompParams(m4=1, m7=1)
    assert params_from_mu((0,) * 6, 1) is None


@pytest.mark.parametrize("name, column", [
    ("x1", (1,)),
    ("x2", (3,)),
    ("x3", (5,)),
    ("x4", (7,)),
    ("x4p", (1, 2, 3, 4, 5)),
    ("x5", (1, 2, 3, 4, 7)),
    ("x6", (1, 2)),
    ("x7", (1, 2, 3, 4, 5, 6)),
])
def test_psi_on_the_x_letters(kr1, name, column):
    assert kr1.psi_tableau(row_of(name)) == (column,)


def test_psi_inverse_of_x6_column(kr1):
    assert kr1.psi_inv(((1, 2),)) == row_of("x6")
    with pytest.raises(ValueError):
        kr1.psi_inv(((1, 2, 3),))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_psi_is_a_bijection(request, s):
    kr = request.getfixturevalue(f"kr{s}")
    seen = set()
    for b in kr.elements():
        T = kr.psi_tableau(b)
        assert kr.psi_inv(T) == b
        seen.add(T)
    assert len(seen) == len(kr.elements())


def test_psi_pointwise_equals_table(kr2):
    for b in random.Random(5).sample(kr2.elements(), 200):
        assert kr2.psi_pointwise(b) == kr2.psi(b)


@pytest.mark.parametrize("s", [1, 2])
def test_psi_intertwines_exhaustively(request, s):
    kr = request.getfixturevalue(f"kr{s}")
    for b in kr.elements():
        T = kr.psi_tableau(b)
        for i in I02:
            fb = kr.f(b, i)
            fT = kr.A6.f(T, E_TO_A6[i])
            assert (fb is None) == (fT is None)
            if fb is not None:
                assert kr.psi_tableau(fb) == fT


def test_psi_intertwines_sampled_s3(kr3):
    for b in random.Random(7).sample(kr3.elements(), 1000):
        T = kr3.psi_tableau(b)
        for i in I02:
            fb = kr3.f(b, i)
            fT = kr3.A6.f(T, E_TO_A6[i])
            assert (fb is None) == (fT is None)
            if fb is not None:
                assert kr3.psi_tableau(fb) == fT


def test_jdt_oracle_small(kr1, kr2):
    for kr in (kr1, kr2):
        for b in kr.elements():
            assert psi_by_jdt(b) == kr.psi_tableau(b)
            assert psi_by_jdt(b, "column-major") == kr.psi_tableau(b)


def test_affine_operators_at_the_highest_row():
    for s in (1, 2, 3):
        kr = KRCrystal(s)
        top = (x_letter("x1"),) * s
        assert kr.epsilon(top, 0) == s
        assert kr.phi(top, 0) == 0


def test_e0_of_x1_lands_in_the_x6_component(kr1):
    b = kr1.e(row_of("x1"), 0)
    assert b is not None
    assert kr1.psi(b).params == CompParams(m6=1)
    assert dim_A((0, 1, 0, 0, 0, 0)) == 21


def test_epsilon0_formula_on_i02_highest(kr3):
    for b in kr3.elements():
        p = classify_i02_highest(b)
        if p is None:
            continue
        assert kr3.epsilon(b, 0) == p.m1 + p.m2 + p.m3 + p.m4p
        assert kr3.phi(b, 0) == 0


def test_build_kr1(graph1):
    assert len(graph1) == 56
    assert graph1.edge_count(0) == 12
    assert graph1.axiom_violations() == []
    comps = graph1.components(sorted(I - {2}))
    assert sorted(len(c) for c in comps) == [28, 28]


def test_build_kr2(graph2):
    assert len(graph2) == 1463
    assert graph2.is_connected()
    assert graph2.axiom_violations() == []


def test_build_kr3_axioms(graph3):
    assert len(graph3) == 24320
    assert graph3.axiom_violations() == []
    assert graph3.is_connected()


def test_e0_f0_inverse(graph2, kr2):
    for b in graph2.nodes:
        t = kr2.f(b, 0)
        if t is not None:
            assert kr2.e(t, 0) == b


def test_affine_weights_have_level_zero(kr2):
    for b in kr2.elements()[:300]:
        assert level(kr2.affine_weight(b)) == 0


def test_a6_components_at_s1():
    comps = a6_components(1)
    assert sorted(mu for _, mu in comps) == sorted([
        (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1),
    ])


def test_a7_components_examples():
    assert a7_components(0) == [(0,) * 7]
    assert sorted(a7_components(1)) == sorted([(0, 0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0, 0)])
    comps = a7_components(2)
    assert len(comps) == 5
    assert sorted(dim_A(mu) for mu in comps) == [1, 70, 336, 336, 720]


@pytest.mark.parametrize("s", [1, 2, 3])
def test_a7_components_observed(request, s):
    g = request.getfixturevalue(f"graph{s}")
    assert observed_a7_components(g) == sorted(a7_components(s))
    assert sum(dim_A(mu) for mu in a7_components(s)) == len(g)


def test_a7_weight_of_w7():
    assert a7_weight((0, 0, 0, 0, 0, 0, 1)) == (1, 0, 0, 0, 0, 0, -1)


def test_e6_decomposition():
    r0 = e6_decomposition(0)
    assert r0.components == {(0,) * 6: 1}
    r1 = e6_decomposition(1)
    rc = RowCrystal(1)
    assert sorted(rc.label(h) for h in r1.highest) == sorted(["7", "7̄6", "7̄1", "7̄"])
    assert r1.components[(0,) * 6] == 2
    sizes = sorted(r1.sizes[w] for w, m in r1.components.items() for _ in range(m))
    assert sizes == [1, 1, 27, 27]
    for s in range(4):
        r = e6_decomposition(s)
        assert r.count_formula_matches
        assert sum(r.sizes[w] * m for w, m in r.components.items()) == len(RowCrystal(s).elements())
    assert not e6_decomposition(2).caption_formula_matches


def test_phi_small_example():
    rc = RowCrystal(1)
    assert phi_automorphism(rc.from_labels(["7"])) == rc.from_labels(["7̄"])


@pytest.mark.parametrize("s", [1, 2])
def test_phi_involution_and_sigma(request, s):
    kr = request.getfixturevalue(f"kr{s}")
    phi = PhiAutomorphism(s)
    table = phi.table()
    assert len(table) == len(kr.elements())
    for b, t in table.items():
        assert table[t] == b
    for b in kr.elements():
        assert phi_via_sigma(kr, b) == table[b]


def test_phi_is_a_twisted_automorphism(graph2):
    table = PhiAutomorphism(2).table()
    for b in graph2.nodes:
        for i in I:
            fb = graph2.f(b, i)
            target = graph2.f(table[b], AFFINE_TWIST[i])
            assert (None if fb is None else table[fb]) == target


def test_printed_phi_report():
    rep = printed_phi_report(2)
    assert rep.reversed_matches
    assert not rep.printed_preserves_length
    assert chain_counts(PhiAutomorphism(1).match[(0,)]) == (0, 0, 0, 1)
