"""Branching of B(k w1) of E7 to A7 and the B^{1,s} multiplicity conjecture."""

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..cartan import E_TO_A7, I0, classical_level
from ..crystal_core import (
    CrystalGraph, IndexedCrystal, ResourceLimitError, TensorPowerCrystal,
    TensorProductCrystal, apply_f_string, generate_subcrystal, letters, lower_closure,
    reachability,
)
from ..tableaux import weight_character, weight_to_partition

# f-string taking the highest letter to the letter x with x (x) 7 of weight w1.
ADJOINT_STRING = (7, 6, 5, 4, 2, 3, 4, 5, 6, 7)
DEFAULT_MAX_K = 3

AWeight = Tuple[int, ...]


# -- the adjoint crystal ------------------------------------------------------------

@lru_cache(maxsize=1)
def adjoint_base() -> CrystalGraph:
    """B(w1) (133 elements) inside B(w7) (x) B(w7)."""
    L = letters()
    x = apply_f_string(L, L.highest, ADJOINT_STRING)
    T = TensorProductCrystal([L, L])
    g = generate_subcrystal(T, [(x, L.highest)], I0)
    g.metadata = {"type": "adjoint", "s": 1}
    return g


@lru_cache(maxsize=1)
def adjoint_indexed() -> IndexedCrystal:
    return IndexedCrystal(adjoint_base())


def adjoint_highest() -> int:
    A = adjoint_indexed()
    hw = [b for b in range(len(A)) if all(A.e(b, i) is None for i in I0)]
    assert len(hw) == 1
    return hw[0]


def build_adjoint_crystal(k: int, max_k: int = DEFAULT_MAX_K,
                          max_nodes: Optional[int] = None) -> CrystalGraph:
    """B(k w1) as a CrystalGraph.

    k = 1 is the 133-element component in B(w7)^2; for k >= 2 the nodes are
    k-tuples of indices into that component (see ``adjoint_indexed``).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > max_k:
        raise ResourceLimitError(f"adjoint crystal bounded by k <= {max_k}, got {k}")
    if k == 0:
        return CrystalGraph(
            nodes=[()], f_edges={}, weights={(): (0,) * 7}, index_set=I0,
            labels={(): "∅"}, metadata={"type": "adjoint", "s": 0},
        )
    if k == 1:
        return adjoint_base()
    P = TensorPowerCrystal(adjoint_indexed(), k)
    g = generate_subcrystal(P, [(adjoint_highest(),) * k], I0, lower_only=True,
                            max_nodes=max_nodes)
    g.metadata = {"type": "adjoint", "s": k}
    return g


def adjoint_character(k: int, max_k: int = DEFAULT_MAX_K) -> Counter:
    """Weight multiset of B(k w1) by f-closure, without building edges."""
    if k > max_k:
        raise ResourceLimitError(f"adjoint crystal bounded by k <= {max_k}, got {k}")
    if k == 0:
        return Counter({(0,) * 7: 1})
    A = adjoint_indexed()
    if k == 1:
        return Counter(A.weights)
    P = TensorPowerCrystal(A, k)
    return Counter(P.weight(w) for w in lower_closure(P, (adjoint_highest(),) * k, I0))


# -- restriction to A7 and peeling --------------------------------------------------

def a7_restrict_weight(mu) -> AWeight:
    """A7 weight of an E7 weight: node dictionary on I_{0,2}, level-zero pairing at 0."""
    out = [0] * 7
    for e, a in E_TO_A7.items():
        out[a - 1] = -classical_level(mu) if e == 0 else mu[e - 1]
    return tuple(out)


def _height2(a: AWeight) -> int:
    # twice the pairing with rho^vee: sum_k a_k k (n+1-k)
    n = len(a)
    return sum(c * k * (n + 1 - k) for k, c in enumerate(a, start=1))


class NotACharacterError(ValueError):
    pass


def peel_decompose(wm: Counter, rank: int = 7) -> Dict[AWeight, int]:
    """Decompose a weight multiset into A_rank irreducible characters."""
    rest = Counter({w: m for w, m in wm.items() if m})
    if any(m < 0 for m in rest.values()):
        raise NotACharacterError("not a character: negative multiplicity")
    out: Dict[AWeight, int] = {}
    while rest:
        top = max(rest, key=lambda w: (_height2(w), w))
        if any(c < 0 for c in top):
            raise NotACharacterError(f"not a character: maximal weight {top} is not dominant")
        m = rest[top]
        out[top] = m
        for w, c in weight_character(weight_to_partition(top), rank).items():
            left = rest[w] - m * c
            if left < 0:
                raise NotACharacterError(f"not a character: weight {w} goes negative")
            if left:
                rest[w] = left
            else:
                del rest[w]
    return out


# -- the conjecture -----------------------------------------------------------------

def triangle_entry(d: int, s: int) -> int:
    """m_{d,s} = sum_{i=M}^{d+1} ceil(i/2), M = max(2d+1-s, 0)."""
    if d < 0 or d > s:
        return 0
    M = max(d + 1 - (s - d), 0)
    return sum((i + 1) // 2 for i in range(M, d + 2))


def triangle_row(s: int) -> List[int]:
    return [triangle_entry(d, s) for d in range(s + 1)]


def conjecture_multiplicity(a: int, b: int, c: int, d: int, s: int,
                            printed: bool = False) -> int:
    """Multiplicity of B(a(w1+w7) + b(w2+w6) + c(w3+w5) + d w4) in B^{1,s}.

    With ``printed=False`` the triangle is read from the other end,
    m_{s'-d, s'} with s' = s - a - 2b - 3c; this is the indexing that agrees
    with direct branching.  ``printed=True`` uses m_{d, s'} literally.
    """
    if min(a, b, c, d) < 0:
        raise ValueError("exponents must be nonnegative")
    s1 = s - a - 2 * b - 3 * c
    if s1 < d:
        return 0
    return triangle_entry(d if printed else s1 - d, s1)


def conjecture_weight(a: int, b: int, c: int, d: int) -> AWeight:
    return (a, b, c, d, c, b, a)


def conjecture_decomposition(s: int, printed: bool = False) -> Dict[AWeight, int]:
    out = {}
    for a in range(s + 1):
        for b in range((s - a) // 2 + 1):
            for c in range((s - a - 2 * b) // 3 + 1):
                for d in range(s - a - 2 * b - 3 * c + 1):
                    m = conjecture_multiplicity(a, b, c, d, s, printed)
                    if m:
                        out[conjecture_weight(a, b, c, d)] = m
    return out


def sigma_weight(a: AWeight) -> AWeight:
    return tuple(reversed(a))


# Reference branchings of sum_{k<=s} B(k w1) to A7, s = 1, 2, 3, as
# {A7 highest weight (fundamental basis): multiplicity}.
REFERENCE_LISTINGS: Dict[int, Dict[AWeight, int]] = {
    1: {
        (0, 0, 0, 0, 0, 0, 0): 1,
        (0, 0, 0, 1, 0, 0, 0): 1,
        (1, 0, 0, 0, 0, 0, 1): 1,
    },
    2: {
        (0, 0, 0, 0, 0, 0, 0): 2,
        (0, 0, 0, 1, 0, 0, 0): 2,
        (0, 0, 0, 2, 0, 0, 0): 1,
        (0, 1, 0, 0, 0, 1, 0): 1,
        (1, 0, 0, 0, 0, 0, 1): 1,
        (1, 0, 0, 1, 0, 0, 1): 1,
        (2, 0, 0, 0, 0, 0, 2): 1,
    },
    3: {
        (0, 0, 0, 0, 0, 0, 0): 2,
        (0, 0, 0, 1, 0, 0, 0): 3,
        (0, 0, 0, 2, 0, 0, 0): 2,
        (0, 0, 1, 0, 1, 0, 0): 1,
        (0, 1, 0, 0, 0, 1, 0): 1,
        (1, 0, 0, 0, 0, 0, 1): 2,
        (1, 0, 0, 1, 0, 0, 1): 2,
        (0, 1, 0, 1, 0, 1, 0): 1,
        (0, 0, 0, 3, 0, 0, 0): 1,
        (1, 0, 0, 2, 0, 0, 1): 1,
        (1, 1, 0, 0, 0, 1, 1): 1,
        (2, 0, 0, 0, 0, 0, 2): 1,
        (2, 0, 0, 1, 0, 0, 2): 1,
        (3, 0, 0, 0, 0, 0, 3): 1,
    },
}

# The triangle m_{d,s}, rows s = 0..9, d = 0..s.
REFERENCE_TRIANGLE: Dict[int, List[int]] = {
    0: [1],
    1: [1, 1],
    2: [1, 2, 2],
    3: [1, 2, 3, 2],
    4: [1, 2, 4, 4, 3],
    5: [1, 2, 4, 5, 5, 3],
    6: [1, 2, 4, 6, 7, 6, 4],
    7: [1, 2, 4, 6, 8, 8, 7, 4],
    8: [1, 2, 4, 6, 9, 10, 10, 8, 5],
    9: [1, 2, 4, 6, 9, 11, 12, 11, 9, 5],
}


@dataclass
class BranchReport:
    s: int
    multiplicities: Dict[AWeight, int] = field(default_factory=dict)
    conjecture: Dict[AWeight, int] = field(default_factory=dict)
    printed_conjecture: Dict[AWeight, int] = field(default_factory=dict)
    reference: Optional[Dict[AWeight, int]] = None
    sigma_fixed: bool = True

    @property
    def match(self) -> bool:
        return self.multiplicities == self.conjecture

    @property
    def printed_match(self) -> bool:
        return self.multiplicities == self.printed_conjecture

    @property
    def reference_match(self) -> Optional[bool]:
        if self.reference is None:
            return None
        return self.multiplicities == self.reference

    def lines(self) -> List[str]:
        out = [f"s = {self.s}: {len(self.multiplicities)} distinct A7 components"]
        for w in sorted(self.multiplicities, key=lambda w: (_height2(w), w)):
            out.append(
                f"  {_fmt(w):<28} observed {self.multiplicities[w]:>3}"
                f"  conjectured {self.conjecture.get(w, 0):>3}"
                f"  (literal index {self.printed_conjecture.get(w, 0)})"
            )
        out.append(f"matches conjecture: {self.match}")
        out.append(f"matches literal triangle index: {self.printed_match}")
        if self.reference is not None:
            out.append(f"matches reference listing: {self.reference_match}")
        out.append(f"supported on sigma-fixed weights: {self.sigma_fixed}")
        return out

    def to_dict(self) -> Dict:
        def enc(m):
            return [{"weight": list(w), "mult": v} for w, v in sorted(m.items())]
        return {
            "s": self.s,
            "multiplicities": enc(self.multiplicities),
            "conjecture": enc(self.conjecture),
            "match": self.match,
            "printed_match": self.printed_match,
            "reference_match": self.reference_match,
            "sigma_fixed": self.sigma_fixed,
        }


def _fmt(w: AWeight) -> str:
    terms = [f"{'' if c == 1 else c}fwA{k}" for k, c in enumerate(w, start=1) if c]
    return " + ".join(terms) if terms else "0"


def branching_multiplicities(s: int, max_k: int = DEFAULT_MAX_K) -> Dict[AWeight, int]:
    total = Counter()
    for k in range(s + 1):
        for w, m in adjoint_character(k, max_k).items():
            total[a7_restrict_weight(w)] += m
    return peel_decompose(total)


def check_conjecture(s: int, max_k: int = DEFAULT_MAX_K) -> BranchReport:
    mult = branching_multiplicities(s, max_k)
    return BranchReport(
        s=s,
        multiplicities=mult,
        conjecture=conjecture_decomposition(s),
        printed_conjecture=conjecture_decomposition(s, printed=True),
        reference=REFERENCE_LISTINGS.get(s),
        sigma_fixed=all(sigma_weight(w) == w for w in mult),
    )


# -- two-fold tensor characterization ------------------------------------------------

@dataclass
class TwoTensorReport:
    pairs: int
    members: int
    letter_failures: List[Tuple[int, int]] = field(default_factory=list)
    sufficient_failures: List[Tuple[int, int]] = field(default_factory=list)
    members_not_below: int = 0
    diagonal_nonmembers: int = 0

    @property
    def verdict(self) -> bool:
        """Membership implies the letter conditions, and the letter conditions
        together with X < Y strictly imply membership."""
        return not self.letter_failures and not self.sufficient_failures

    @property
    def literal_verdict(self) -> bool:
        """The two-sided statement with X <= Y read as part of membership."""
        return self.verdict and self.members_not_below == 0 and self.diagonal_nonmembers == 0

    def lines(self) -> List[str]:
        return [
            f"pairs checked: {self.pairs}",
            f"|B(2w1)| = {self.members}",
            f"members violating b1 <= b2, c1 <= c2: {len(self.letter_failures)}",
            f"pairs with letter conditions and X < Y outside B(2w1): {len(self.sufficient_failures)}",
            f"members with X, Y incomparable in B(w1): {self.members_not_below}",
            f"diagonal pairs X (x) X outside B(2w1): {self.diagonal_nonmembers}",
            f"verdict: {self.verdict}",
            f"two-sided reading holds: {self.literal_verdict}",
        ]

    def to_dict(self) -> Dict:
        return {
            "pairs": self.pairs,
            "members": self.members,
            "letter_failures": len(self.letter_failures),
            "sufficient_failures": len(self.sufficient_failures),
            "members_not_below": self.members_not_below,
            "diagonal_nonmembers": self.diagonal_nonmembers,
            "verdict": self.verdict,
            "literal_verdict": self.literal_verdict,
        }


@lru_cache(maxsize=1)
def adjoint_square_members() -> frozenset:
    """B(2 w1) as a set of index pairs into ``adjoint_indexed``."""
    P = TensorPowerCrystal(adjoint_indexed(), 2)
    u = adjoint_highest()
    return frozenset(lower_closure(P, (u, u), I0))


@lru_cache(maxsize=1)
def adjoint_poset() -> List[frozenset]:
    """up[x] = indices reachable from x by f-arrows in B(w1), x included."""
    A = adjoint_indexed()
    reach = reachability(A.graph)
    return [frozenset(A.pos[t] for t in reach[b]) for b in A.nodes]


def adjoint_le(x: int, y: int) -> bool:
    return y in adjoint_poset()[x]


def check_two_tensor_characterization() -> TwoTensorReport:
    """Compare membership of X (x) Y in B(2 w1), X = b1 (x) c1, Y = b2 (x) c2,
    with b1 <= b2, c1 <= c2 in B(w7) and X <= Y in B(w1), over all pairs."""
    from ..rows import poset_le

    A = adjoint_indexed()
    members = adjoint_square_members()
    n = len(A)
    report = TwoTensorReport(pairs=n * n, members=len(members))
    for X in range(n):
        b1, c1 = A.nodes[X]
        for Y in range(n):
            b2, c2 = A.nodes[Y]
            letters_ok = poset_le(b1, b2) and poset_le(c1, c2)
            inside = (X, Y) in members
            if inside and not letters_ok:
                report.letter_failures.append((X, Y))
            if inside and not adjoint_le(X, Y):
                report.members_not_below += 1
            if X == Y:
                report.diagonal_nonmembers += not inside
            elif letters_ok and adjoint_le(X, Y) and not inside:
                report.sufficient_failures.append((X, Y))
    return report
