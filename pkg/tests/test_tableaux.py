import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e7kr.analysis.branching import NotACharacterError, peel_decompose
from e7kr.cartan import dim_A
from e7kr.tableaux import (
    branch_components, character, conjugate, drop_full_columns, highest_weight_crystal,
    is_semistandard, pad_even_columns, partition_to_weight, rectify, rows_of, shape,
    sigma, strip_letter, superstandard_of_weight, tableau_crystal,
    weight_character, weight_to_partition,
)


def random_tableau(a, n, rng, steps=30):
    C = tableau_crystal(n)
    T = superstandard_of_weight(a)
    for _ in range(steps):
        i = rng.randint(1, n)
        t = C.f(T, i)
        if t is not None:
            T = t
    return T


weights7 = st.lists(st.integers(min_value=0, max_value=2), min_size=7, max_size=7).map(tuple)
weights3 = st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3).map(tuple)


def test_shape_helpers():
    T = ((1, 2, 3), (2, 4))
    assert shape(T) == (2, 2, 1)
    assert conjugate((2, 2, 1)) == (3, 2)
    assert rows_of(T) == [[1, 2], [2, 4], [3]]
    assert weight_to_partition((1, 0, 1)) == (2, 1, 1)
    assert partition_to_weight((2, 1, 1), 3) == (1, 0, 1)
    assert partition_to_weight((1, 1, 1, 1), 3) == (0, 0, 0)
    assert is_semistandard(T, 3)
    assert not is_semistandard(((2, 1),))


def test_small_operators():
    C = tableau_crystal(6)
    assert C.f(((1, 2),), 2) == ((1, 3),)
    assert C.f(((1, 2),), 1) is None


def test_sigma_examples():
    assert sigma(((1,),), 7) == ((1, 2, 3, 4, 5, 6, 7),)
    assert sigma(((2,),), 7) == ((1, 2, 3, 4, 5, 6, 8),)


def test_crystal_sizes_against_dimension():
    assert len(highest_weight_crystal((2, 2, 2, 2, 2, 2), 7)) == 336
    for lam, n in [((2, 1), 3), ((3, 1, 1), 4), ((1, 1, 1, 1), 7)]:
        g = highest_weight_crystal(lam, n)
        assert len(g) == dim_A(partition_to_weight(lam, n))
        assert g.axiom_violations() == []


def test_branching_is_interlacing():
    assert sorted(branch_components((2, 1))) == [(1,), (1, 1), (2,), (2, 1)]


def test_pad_and_strip():
    T = ((1, 2, 3), (2,))
    U = pad_even_columns(T)
    assert U == ((1, 2, 3, 8), (2, 8))
    assert strip_letter(U) == T
    with pytest.raises(ValueError):
        pad_even_columns(((8,),))


def test_rectify_two_columns():
    T = rectify([(1, 2), (1, 2, 3, 4, 5, 6)])
    assert rows_of(T) == [[1, 1], [2, 2], [3], [4], [5], [6]]
    assert drop_full_columns(((1, 2, 3, 4, 5, 6, 7), (1,)), 6) == ((1,),)


def test_rectify_rejects_unknown_order():
    with pytest.raises(ValueError):
        rectify([(1,)], order="diagonal")


@settings(max_examples=60, deadline=None)
@given(weights3, st.integers(min_value=0, max_value=10**6))
def test_f_e_inverse_and_semistandard(a, seed):
    rng = random.Random(seed)
    T = random_tableau(a, 3, rng)
    C = tableau_crystal(3)
    assert is_semistandard(T, 3)
    for i in (1, 2, 3):
        t = C.f(T, i)
        if t is not None:
            assert C.e(t, i) == T
            assert C.phi(T, i) - C.epsilon(T, i) == C.weight(T)[i - 1]


@settings(max_examples=40, deadline=None)
@given(weights3, st.integers(min_value=0, max_value=10**6))
def test_sigma_is_an_involution(a, seed):
    T = random_tableau(a, 3, random.Random(seed))
    S = sigma(T, 3)
    assert sigma(S, 3) == T
    assert shape(S) == shape(superstandard_of_weight(tuple(reversed(a))))


@settings(max_examples=40, deadline=None)
@given(weights3, st.integers(min_value=0, max_value=10**6))
def test_rectifying_the_columns_of_a_tableau_is_the_identity(a, seed):
    T = random_tableau(a, 3, random.Random(seed))
    for order in ("row-major", "column-major"):
        assert rectify(T, order) == T


@settings(max_examples=30, deadline=None)
@given(weights3)
def test_character_size_is_the_weyl_dimension(a):
    lam = weight_to_partition(a)
    assert sum(character(lam, 3).values()) == dim_A(a)


def _random_small_weight(rng, bound=10**5):
    while True:
        a = tuple(rng.choice((0, 0, 0, 1, 1, 2)) for _ in range(7))
        if dim_A(a) <= bound:
            return a


def test_peel_round_trip_random_weights():
    rng = random.Random(11)
    for _ in range(20):
        a = _random_small_weight(rng)
        assert peel_decompose(weight_character(weight_to_partition(a), 7)) == {a: 1}


@settings(max_examples=15, deadline=None)
@given(weights7, weights7)
def test_peel_is_additive(a, b):
    if dim_A(a) > 20000 or dim_A(b) > 20000:
        return
    total = weight_character(weight_to_partition(a), 7) + weight_character(weight_to_partition(b), 7)
    expect = Counter({a: 1}) + Counter({b: 1})
    assert peel_decompose(total) == dict(expect)


def test_peel_rejects_non_characters():
    with pytest.raises(NotACharacterError):
        peel_decompose(Counter({(0, 0, 0, 0, 0, 0, -1): 1}))
    broken = weight_character((1,), 7)
    broken[(1, 0, 0, 0, 0, 0, 0)] += 1
    with pytest.raises(NotACharacterError):
        peel_decompose(broken)
