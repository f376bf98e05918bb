"""B(s w7) as single-row tableaux: multichains x_1 <= ... <= x_s in the letter poset.

A row is a tuple of letter indices, nondecreasing in the LetterCrystal order,
and acts as the tensor word x_1 (x) x_2 (x) ... (x) x_s.
"""

from dataclasses import astuple, dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .cartan import I0, I02
from .crystal_core import (
    Crystal, ResourceLimitError, letters, letters_E7, reachability,
)

DEFAULT_MAX_S = 6

# The I_{0,2}-highest letters of the composition graph, by compact label.
X_LABELS = {
    "x1": "7",
    "x2": "6̄5",
    "x3": "4̄23",
    "x4": "1̄2",
    "x4p": "2̄3",
    "x5": "1̄2̄4",
    "x6": "2̄6",
    "x7": "2̄1",
}
PARAM_NAMES = ("m1", "m2", "m3", "m4", "m4p", "m5", "m6", "m7")


def x_letter(name: str) -> int:
    return letters().from_label(X_LABELS[name])


_LE = None


def _le_table():
    global _LE
    if _LE is None:
        reach = reachability(letters_E7())
        n = len(letters())
        _LE = [[b in reach[a] for b in range(n)] for a in range(n)]
    return _LE


def poset_le(a: int, b: int) -> bool:
    """a <= b iff b is reachable from a by f-arrows in B(w7)."""
    return _le_table()[a][b]


def is_row(row) -> bool:
    le = _le_table()
    return all(le[row[k]][row[k + 1]] for k in range(len(row) - 1))


def enumerate_rows(s: int, max_s: int = DEFAULT_MAX_S) -> List[Tuple[int, ...]]:
    """All multichains of length s, in lexicographic order of letter indices."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s > max_s:
        raise ResourceLimitError(f"row enumeration bounded by s <= {max_s}, got {s}")
    le = _le_table()
    n = len(le)
    up = [[b for b in range(a, n) if le[a][b]] for a in range(n)]
    out: List[Tuple[int, ...]] = []

    def rec(prefix, last, remaining):
        if remaining == 0:
            out.append(prefix)
            return
        for b in up[last]:
            rec(prefix + (b,), b, remaining - 1)

    if s == 0:
        return [()]
    for a in range(n):
        rec((a,), a, s - 1)
    return out


class RowCrystal(Crystal):
    """Classical E7 crystal B(s w7) on rows of length s."""

    index_set = I0

    def __init__(self, s: int):
        if s < 0:
            raise ValueError("s must be nonnegative")
        self.s = s
        self.L = letters()
        L = self.L
        self._lf = L._f
        self._le = L._e
        self._leps = L._eps
        self._lphi = L._phi

    def highest(self) -> Tuple[int, ...]:
        return (self.L.highest,) * self.s

    def f(self, row, i):
        phi = self._lphi[i]
        eps = self._leps[i]
        plus = 0
        pos = -1
        for k, b in enumerate(row):
            if phi[b]:
                if plus:
                    plus -= 1
                else:
                    pos = k
            if eps[b]:
                plus += 1
        if pos < 0:
            return None
        return row[:pos] + (self._lf[i][row[pos]],) + row[pos + 1:]

    def e(self, row, i):
        phi = self._lphi[i]
        eps = self._leps[i]
        minus = 0
        pos = -1
        for k in range(len(row) - 1, -1, -1):
            b = row[k]
            if eps[b]:
                if minus:
                    minus -= 1
                else:
                    pos = k
            if phi[b]:
                minus += 1
        if pos < 0:
            return None
        return row[:pos] + (self._le[i][row[pos]],) + row[pos + 1:]

    def epsilon(self, row, i):
        phi = self._lphi[i]
        eps = self._leps[i]
        plus = 0
        for b in row:
            if phi[b] and plus:
                plus -= 1
            if eps[b]:
                plus += 1
        return plus

    def phi(self, row, i):
        phi = self._lphi[i]
        eps = self._leps[i]
        minus = 0
        for b in reversed(row):
            if eps[b] and minus:
                minus -= 1
            if phi[b]:
                minus += 1
        return minus

    def weight(self, row):
        w = [0] * 7
        for b in row:
            for k, c in enumerate(self.L.weights[b]):
                w[k] += c
        return tuple(w)

    def label(self, row):
        return " ".join(self.L.label(b) for b in row) if row else "∅"

    def from_labels(self, labels) -> Tuple[int, ...]:
        row = tuple(sorted(self.L.from_label(x) for x in labels))
        if not is_row(row):
            raise ValueError(f"{labels} is not a multichain")
        return row

    def elements(self, max_s: int = DEFAULT_MAX_S) -> List[Tuple[int, ...]]:
        return enumerate_rows(self.s, max_s)


def row_crystal_op(row, i: int, raising: bool):
    """e_i or f_i on a row, for i in I_0."""
    return RowCrystal(len(row)).crystal_op(row, i, raising)


@dataclass(frozen=True, order=True)
class CompParams:
    """Occurrence counts (m1, m2, m3, m4, m4', m5, m6, m7) of the x letters."""

    m1: int = 0
    m2: int = 0
    m3: int = 0
    m4: int = 0
    m4p: int = 0
    m5: int = 0
    m6: int = 0
    m7: int = 0

    @property
    def s(self) -> int:
        return sum(astuple(self))

    def is_valid(self) -> bool:
        t = astuple(self)
        return (
            min(t) >= 0
            and self.m2 <= self.m6
            and self.m3 <= self.m5
            and self.m4 + self.m5 <= self.m7
            and min(self.m4, self.m4p) == 0
        )

    def row(self) -> Tuple[int, ...]:
        """The I_{0,2}-highest row x_1^{m1} ... x_7^{m7}."""
        out = []
        for name, m in zip(PARAM_NAMES, astuple(self)):
            out.extend([x_letter("x" + name[1:])] * m)
        return tuple(sorted(out))

    def a6_weight(self) -> Tuple[int, ...]:
        """Coefficients (a1..a6) of the A6 highest weight."""
        return (
            self.m1,
            self.m6 - self.m2,
            self.m2,
            self.m5 - self.m3,
            self.m3 + self.m4p,
            self.m7 - self.m4 - self.m5,
        )

    def __str__(self):
        return "(" + ",".join(str(v) for v in astuple(self)) + ")"


def enumerate_params(s: int) -> List[CompParams]:
    """All CompParams with sum s satisfying the highest-weight constraints."""
    out = []

    def rec(k, remaining, acc):
        if k == 7:
            p = CompParams(*acc, remaining)
            if p.is_valid():
                out.append(p)
            return
        for v in range(remaining + 1):
            rec(k + 1, remaining - v, acc + [v])

    rec(0, s, [])
    return out


_X_INDEX: Optional[Dict[int, str]] = None


def classify_i02_highest(row) -> Optional[CompParams]:
    """Counts of x letters if the row is I_{0,2}-highest by the constraint test."""
    global _X_INDEX
    if _X_INDEX is None:
        _X_INDEX = {x_letter(name): name for name in X_LABELS}
    counts = dict.fromkeys(PARAM_NAMES, 0)
    for b in row:
        name = _X_INDEX.get(b)
        if name is None:
            return None
        counts["m" + name[1:]] += 1
    p = CompParams(**counts)
    return p if p.is_valid() else None


def is_i02_highest(row) -> bool:
    """Direct test: epsilon_i(row) = 0 for every i in I_{0,2}."""
    rc = RowCrystal(len(row))
    return all(rc.epsilon(row, i) == 0 for i in I02)


def weight_of_params(p: CompParams) -> Tuple[int, ...]:
    """Classical weight of the I_{0,2}-highest row with these counts."""
    if not p.is_valid():
        raise ValueError(f"invalid component parameters {p}")
    return (
        p.m7 - p.m4 - p.m5,
        p.m3 + p.m4 - p.m4p - p.m5 - p.m6 - p.m7,
        p.m3 + p.m4p,
        p.m5 - p.m3,
        p.m2,
        p.m6 - p.m2,
        p.m1,
    )


def iter_i02_highest(s: int) -> Iterator[Tuple[CompParams, Tuple[int, ...]]]:
    for p in enumerate_params(s):
        yield p, p.row()
