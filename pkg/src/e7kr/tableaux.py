"""Type A_n semistandard tableaux and their crystal structure.

A tableau is a tuple of columns (left to right), each column a tuple of
entries read top to bottom (English convention), with entries in 1..n+1.
The crystal acts through the reading word bottom-to-top within a column,
columns left to right.
"""

from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .crystal_core import Crystal, generate_subcrystal, raise_to_highest

Tableau = Tuple[Tuple[int, ...], ...]


# -- shapes ---------------------------------------------------------------------

def column_heights(T: Tableau) -> Tuple[int, ...]:
    return tuple(len(c) for c in T)


def shape(T: Tableau) -> Tuple[int, ...]:
    """Row lengths (a partition)."""
    heights = column_heights(T)
    if not heights:
        return ()
    return tuple(sum(1 for h in heights if h > r) for r in range(heights[0]))


def conjugate(partition: Sequence[int]) -> Tuple[int, ...]:
    partition = [p for p in partition if p > 0]
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > c) for c in range(partition[0]))


def weight_to_partition(a: Sequence[int]) -> Tuple[int, ...]:
    """A_n dominant weight (a_1..a_n) -> partition with at most n rows."""
    n = len(a)
    lam = tuple(sum(a[j] for j in range(k, n)) for k in range(n))
    return tuple(p for p in lam if p > 0)


def partition_to_weight(lam: Sequence[int], n: int) -> Tuple[int, ...]:
    """Partition (columns of height n+1 allowed and dropped) -> A_n weight."""
    lam = list(lam) + [0] * (n + 1 - len(lam))
    if len(lam) > n + 1:
        raise ValueError(f"partition {lam} has more than {n + 1} rows")
    return tuple(lam[k] - lam[k + 1] for k in range(n))


def rows_of(T: Tableau) -> List[List[int]]:
    lam = shape(T)
    return [[T[c][r] for c in range(lam[r])] for r in range(len(lam))]


def from_rows(rows: Sequence[Sequence[int]]) -> Tableau:
    if not rows:
        return ()
    ncols = len(rows[0])
    return tuple(
        tuple(row[c] for row in rows if len(row) > c) for c in range(ncols)
    )


def is_semistandard(T: Tableau, n: Optional[int] = None) -> bool:
    heights = column_heights(T)
    if any(heights[k] < heights[k + 1] for k in range(len(heights) - 1)):
        return False
    if any(h == 0 for h in heights):
        return False
    for col in T:
        if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
            return False
        if col[0] < 1 or (n is not None and col[-1] > n + 1):
            return False
    for c in range(len(T) - 1):
        for r in range(len(T[c + 1])):
            if T[c][r] > T[c + 1][r]:
                return False
    return True


def superstandard(lam: Sequence[int]) -> Tableau:
    """Highest weight tableau of shape lam: row k filled with k."""
    return tuple(tuple(range(1, h + 1)) for h in conjugate(lam))


def superstandard_of_weight(a: Sequence[int]) -> Tableau:
    return superstandard(weight_to_partition(a))


def content(T: Tableau, n: int) -> Tuple[int, ...]:
    c = [0] * (n + 1)
    for col in T:
        for x in col:
            c[x - 1] += 1
    return tuple(c)


def format_tableau(T: Tableau) -> str:
    return "/".join(" ".join(str(x) for x in row) for row in rows_of(T)) or "∅"


# -- crystal ------------------------------------------------------------------------

class TableauCrystal(Crystal):
    """Crystal of SSYT with entries <= n+1 (all shapes at once)."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        self.index_set = frozenset(range(1, n + 1))
        self.root_type = ("A", n)

    def f(self, T, i):
        plus = 0
        hit = None
        for c, col in enumerate(T):
            for r in range(len(col) - 1, -1, -1):
                x = col[r]
                if x == i:
                    if plus:
                        plus -= 1
                    else:
                        hit = (c, r)
                elif x == i + 1:
                    plus += 1
        if hit is None:
            return None
        return _replace(T, hit, i + 1)

    def e(self, T, i):
        minus = 0
        hit = None
        for c in range(len(T) - 1, -1, -1):
            col = T[c]
            for r in range(len(col)):
                x = col[r]
                if x == i + 1:
                    if minus:
                        minus -= 1
                    else:
                        hit = (c, r)
                elif x == i:
                    minus += 1
        if hit is None:
            return None
        return _replace(T, hit, i)

    def epsilon(self, T, i):
        plus = 0
        for col in T:
            for r in range(len(col) - 1, -1, -1):
                x = col[r]
                if x == i:
                    if plus:
                        plus -= 1
                elif x == i + 1:
                    plus += 1
        return plus

    def phi(self, T, i):
        minus = 0
        for c in range(len(T) - 1, -1, -1):
            for x in T[c]:
                if x == i + 1:
                    if minus:
                        minus -= 1
                elif x == i:
                    minus += 1
        return minus

    def weight(self, T):
        cnt = content(T, self.n)
        return tuple(cnt[k] - cnt[k + 1] for k in range(self.n))

    def label(self, T):
        return format_tableau(T)


def _replace(T, pos, value):
    c, r = pos
    col = T[c]
    return T[:c] + (col[:r] + (value,) + col[r + 1:],) + T[c + 1:]


_CRYSTALS: Dict[int, TableauCrystal] = {}


def tableau_crystal(n: int) -> TableauCrystal:
    if n not in _CRYSTALS:
        _CRYSTALS[n] = TableauCrystal(n)
    return _CRYSTALS[n]


def ssyt_crystal_op(T: Tableau, i: int, raising: bool, n: int):
    return tableau_crystal(n).crystal_op(T, i, raising)


def highest_weight_crystal(lam: Sequence[int], n: int):
    """CrystalGraph of B(lam) for A_n, generated from the superstandard tableau."""
    C = tableau_crystal(n)
    return generate_subcrystal(C, [superstandard(lam)], lower_only=True)


@lru_cache(maxsize=None)
def character(lam: Tuple[int, ...], n: int) -> Counter:
    """Multiset of contents of SSYT of shape lam with entries <= n+1.

    Enumerated letter by letter: the cells holding n+1 form a horizontal
    strip lam/mu.
    """
    lam = tuple(p for p in lam if p > 0)
    if len(lam) > n + 1:
        return Counter()
    if n == 0:
        if len(lam) > 1:
            return Counter()
        return Counter({(lam[0] if lam else 0,): 1})
    out = Counter()
    for mu in branch_components(lam, n + 1):
        sub = character(mu, n - 1)
        k = sum(lam) - sum(mu)
        for cont, mult in sub.items():
            out[cont + (k,)] += mult
    return out


def weight_character(lam: Sequence[int], n: int) -> Counter:
    """Character of B(lam) as a Counter of A_n weights (fundamental basis)."""
    out = Counter()
    for cont, mult in character(tuple(lam), n).items():
        out[tuple(cont[k] - cont[k + 1] for k in range(n))] += mult
    return out


def branch_components(lam: Sequence[int], n: int = None) -> List[Tuple[int, ...]]:
    """All mu with lam/mu a horizontal strip, i.e. lam_{k+1} <= mu_k <= lam_k.

    The result (partitions, trailing zeros dropped) is multiplicity free.
    """
    lam = [p for p in lam if p > 0]
    out = []

    def rec(k, acc):
        if k == len(lam):
            out.append(tuple(p for p in acc if p > 0))
            return
        lo = lam[k + 1] if k + 1 < len(lam) else 0
        for v in range(lam[k], lo - 1, -1):
            rec(k + 1, acc + [v])

    rec(0, [])
    return out


# -- padding with n+1's -------------------------------------------------------------

def pad_even_columns(T: Tableau, letter: int = 8) -> Tableau:
    """Append ``letter`` to every odd-height column so all heights are even."""
    padded = tuple(col + (letter,) if len(col) % 2 else col for col in T)
    if any(letter in col[:-1] for col in T) or not is_semistandard(padded):
        raise ValueError("no valid even padding")
    return padded


def strip_letter(T: Tableau, letter: int = 8) -> Tableau:
    """Remove every cell equal to ``letter`` (they sit at column bottoms)."""
    out = []
    for col in T:
        if letter in col[:-1]:
            raise ValueError(f"{letter} is not at the bottom of its column")
        new = col[:-1] if col and col[-1] == letter else col
        if new:
            out.append(new)
    return tuple(out)


# -- diagram automorphism -------------------------------------------------------

def sigma(T: Tableau, n: int) -> Tableau:
    """Diagram automorphism i -> n+1-i, by f-string transport between highest weights."""
    C = tableau_crystal(n)
    hw, estring = raise_to_highest(C, T, list(range(1, n + 1)))
    a = C.weight(hw)
    image = superstandard_of_weight(tuple(reversed(a)))
    for i in reversed(estring):
        image = C.f(image, n + 1 - i)
        if image is None:
            raise AssertionError("sigma transport vanished")
    return image


# -- jeu de taquin ------------------------------------------------------------------

def skew_from_columns(columns: Sequence[Sequence[int]]):
    """Place columns corner to corner, rightmost column on top.

    Returns (cells dict {(row, col): entry}, inner shape set).
    """
    heights = [len(c) for c in columns]
    cells = {}
    inner = set()
    for j, col in enumerate(columns):
        start = sum(heights[j + 1:])
        for r in range(start):
            inner.add((r, j))
        for r, x in enumerate(col):
            cells[(start + r, j)] = x
    return cells, inner


def _inner_corners(inner):
    return [
        (r, c) for (r, c) in inner
        if (r + 1, c) not in inner and (r, c + 1) not in inner
    ]


def _slide(cells, hole):
    r, c = hole
    while True:
        below = cells.get((r + 1, c))
        right = cells.get((r, c + 1))
        if below is None and right is None:
            return
        if right is None or (below is not None and below <= right):
            cells[(r, c)] = cells.pop((r + 1, c))
            r += 1
        else:
            cells[(r, c)] = cells.pop((r, c + 1))
            c += 1


def drop_full_columns(T: Tableau, n: int) -> Tableau:
    """Remove columns of height n+1; they carry the trivial A_n representation."""
    return tuple(col for col in T if len(col) != n + 1)


def rectify(columns: Sequence[Sequence[int]], order: str = "row-major") -> Tableau:
    """Jeu de taquin rectification of the corner-to-corner column skew tableau.

    ``order`` picks the next inner corner: "row-major" takes the lowest then
    rightmost corner; "column-major" the rightmost then lowest.  Both give the
    same answer.
    """
    if order not in ("row-major", "column-major"):
        raise ValueError(f"unknown slide order {order!r}")
    columns = [tuple(c) for c in columns if len(c)]
    cells, inner = skew_from_columns(columns)
    while inner:
        corners = _inner_corners(inner)
        if order == "row-major":
            hole = max(corners)
        else:
            hole = max(corners, key=lambda rc: (rc[1], rc[0]))
        inner.remove(hole)
        _slide(cells, hole)
    nrows = max((r for r, _ in cells), default=-1) + 1
    rows = [[cells[(r, c)] for c in range(len(cells)) if (r, c) in cells] for r in range(nrows)]
    return from_rows(rows)
