"""Root datum of E7^(1), its Levi subdiagrams, and type A_n.

Weights live in the fundamental-weight basis, so the coefficient of w_i is
the pairing with the simple coroot alpha_i^vee.  Classical weights are
7-tuples indexed by nodes 1..7; affine weights are 8-tuples on Lambda_0..7.
The null root is not tracked.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, List, Sequence, Tuple

ClassicalWeight = Tuple[int, ...]
AffineWeight = Tuple[int, ...]

I: FrozenSet[int] = frozenset(range(8))
I0: FrozenSet[int] = I - {0}
I2: FrozenSet[int] = I - {2}
I02: FrozenSet[int] = I - {0, 2}
I07: FrozenSet[int] = I0 - {7}

INDEX_SETS: Dict[str, FrozenSet[int]] = {
    "I": I, "I0": I0, "I2": I2, "I02": I02, "I07": I07,
}

# Dynkin diagram: chain 0-1-3-4-5-6-7 with 2 attached to 4.
DYNKIN_EDGES = ((0, 1), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4))

# Coroot marks a_i^vee, i = 0..7.
MARKS = (1, 2, 2, 3, 4, 3, 2, 1)

# A7 node k <-> E7^(1) node; restricting to k <= 6 gives the A6 Levi of E7.
A7_TO_E = {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 1, 7: 0}
E_TO_A7 = {e: a for a, e in A7_TO_E.items()}
A6_TO_E = {a: e for a, e in A7_TO_E.items() if a <= 6}
E_TO_A6 = {e: a for a, e in A6_TO_E.items()}

# Order-2 diagram automorphism of E7^(1); its restriction to I_{0,7} is the E6 one.
AFFINE_TWIST = {0: 7, 7: 0, 1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
E6_TWIST = {i: AFFINE_TWIST[i] for i in I07}


def _build_cartan():
    adj = set(DYNKIN_EDGES) | {(j, i) for i, j in DYNKIN_EDGES}
    return tuple(
        tuple(2 if i == j else (-1 if (i, j) in adj else 0) for j in range(8))
        for i in range(8)
    )


CARTAN = _build_cartan()
CARTAN_E7 = tuple(row[1:] for row in CARTAN[1:])


def cartan_entry(i: int, j: int) -> int:
    if i not in I or j not in I:
        raise ValueError(f"node out of range for E7^(1): ({i}, {j})")
    return CARTAN[i][j]


def cartan_matrix_A(n: int) -> Tuple[Tuple[int, ...], ...]:
    if n < 1:
        raise ValueError("rank must be positive")
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def level(w: Sequence[int]) -> int:
    """Level of an affine weight given on Lambda_0..Lambda_7."""
    if len(w) != 8:
        raise ValueError("affine weight needs 8 coefficients")
    return sum(a * c for a, c in zip(MARKS, w))


def classical_level(mu: Sequence[int]) -> int:
    """sum_{i=1..7} a_i^vee mu_i; minus the alpha_0-pairing of a level-zero lift."""
    if len(mu) != 7:
        raise ValueError("classical weight needs 7 coefficients")
    return sum(a * c for a, c in zip(MARKS[1:], mu))


def affinize(mu: Sequence[int]) -> AffineWeight:
    """Level-zero affine weight with classical part mu."""
    return (-classical_level(mu),) + tuple(mu)


def pairing(mu: Sequence[int], i: int) -> int:
    """<alpha_i^vee, mu> for a classical weight, using the level-zero lift at i = 0."""
    if i == 0:
        return -classical_level(mu)
    return mu[i - 1]


def simple_root(i: int) -> ClassicalWeight:
    """Classical projection of alpha_i in the fundamental basis (alpha_0 -> -theta)."""
    return tuple(CARTAN[j][i] for j in range(1, 8))


def enumerate_level_weights(ell: int) -> List[AffineWeight]:
    """Dominant affine weights of level exactly ell, sorted."""
    if ell < 0:
        raise ValueError("level must be nonnegative")
    out = []

    def rec(node, remaining, acc):
        if node == 8:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for c in range(remaining // MARKS[node] + 1):
            rec(node + 1, remaining - c * MARKS[node], acc + [c])

    rec(0, ell, [])
    return sorted(out)


def enumerate_level_weights_brute(ell: int) -> List[AffineWeight]:
    return sorted(
        w for w in product(range(ell + 1), repeat=8) if level(w) == ell
    )


def weight_label_affine(w: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(w):
        if c:
            terms.append(f"{'' if c == 1 else c}L{i}")
    return " + ".join(terms) if terms else "0"


# -- root systems, used for dimension oracles ---------------------------------

def positive_roots(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Positive roots (simple-root coordinates) of a simply-laced finite type."""
    n = len(cartan)

    def form(a, b):
        return sum(a[i] * cartan[i][j] * b[j] for i in range(n) for j in range(n))

    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                if form(beta, simple[i]) == -1:
                    gamma = tuple(b + (k == i) for k, b in enumerate(beta))
                    if gamma not in roots:
                        roots.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


_ROOT_CACHE: Dict[Tuple, List[Tuple[int, ...]]] = {}


def weyl_dimension(cartan: Sequence[Sequence[int]], lam: Sequence[int]) -> int:
    """Weyl dimension formula for a dominant weight in the fundamental basis."""
    key = tuple(tuple(r) for r in cartan)
    if key not in _ROOT_CACHE:
        _ROOT_CACHE[key] = positive_roots(cartan)
    num = Fraction(1)
    for beta in _ROOT_CACHE[key]:
        top = sum(c * (l + 1) for c, l in zip(beta, lam))
        bottom = sum(beta)
        num *= Fraction(top, bottom)
    assert num.denominator == 1
    return int(num)


def dim_E7(lam: Sequence[int]) -> int:
    return weyl_dimension(CARTAN_E7, lam)


def dim_A(lam: Sequence[int]) -> int:
    return weyl_dimension(cartan_matrix_A(len(lam)), lam)
