"""The KR crystal B^{7,s}: classical rows plus synthesized e_0 / f_0.

psi sends a row to an A6 tableau by f-string transport from the
I_{0,2}-highest row of its component.  Padding every odd column with an 8
lifts that tableau into the A7 crystal where color 7 plays the role of the
affine node 0.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .cartan import (
    A6_TO_E, CARTAN_E7, E6_TWIST, E_TO_A6, I, I02, I07, A7_TO_E,
    affinize, pairing, weyl_dimension,
)
from .crystal_core import (
    Crystal, CrystalGraph, ResourceLimitError, raise_to_highest, transport_component,
)
from .rows import (
    DEFAULT_MAX_S, CompParams, RowCrystal, classify_i02_highest, enumerate_params,
    enumerate_rows,
)
from .tableaux import (
    Tableau, drop_full_columns, format_tableau, rectify, pad_even_columns, partition_to_weight, shape, sigma,
    strip_letter, superstandard_of_weight, tableau_crystal,
)

# Scan order used when raising to an I_{0,2}-highest element.
RAISE_ORDER = (7, 6, 5, 4, 3, 1)
A6_COLORS = (1, 2, 3, 4, 5, 6)
E6_CARTAN = tuple(row[:6] for row in CARTAN_E7[:6])


@dataclass(frozen=True)
class A6Image:
    params: CompParams
    tableau: Tableau

    def __str__(self):
        return f"{self.params}: {format_tableau(self.tableau)}"


def params_from_mu(a, s: int) -> Optional[CompParams]:
    """Unique CompParams whose A6 highest weight is a = (a1..a6), or None."""
    a1, a2, a3, a4, a5, a6 = a
    twice = s - a1 - a2 - 2 * a3 - 2 * a4 - 3 * a5 - a6
    if twice % 2:
        return None
    diff = twice // 2
    m4, m4p = max(diff, 0), max(-diff, 0)
    p = CompParams(
        m1=a1,
        m2=a3,
        m3=a5 - m4p,
        m4=m4,
        m4p=m4p,
        m5=a4 + a5 - m4p,
        m6=a2 + a3,
        m7=a4 + a5 + a6 + m4 - m4p,
    )
    if not p.is_valid() or p.s != s or p.a6_weight() != tuple(a):
        return None
    return p


def a6_components(s: int) -> List[Tuple[CompParams, Tuple[int, ...]]]:
    return [(p, p.a6_weight()) for p in enumerate_params(s)]


def a7_components(s: int) -> List[Tuple[int, ...]]:
    """A7 highest weights (fwA1..fwA7) from the m4..m7 constraints."""
    out = set()
    for m7 in range(s + 1):
        for m6 in range(s - m7 + 1):
            for m5 in range(s - m7 - m6 + 1):
                m4 = s - m7 - m6 - m5
                if m4 + m5 <= m7:
                    out.add((0, m6, 0, m5, 0, m7 - m4 - m5, 0))
    return sorted(out)


def a7_weight(mu) -> Tuple[int, ...]:
    """A7 weight of a level-zero classical weight through the node dictionary."""
    return tuple(pairing(mu, A7_TO_E[k]) for k in range(1, 8))


class KRCrystal(Crystal):
    """B^{7,s} on rows of length s, colors 0..7."""

    index_set = I
    root_type = "E7"

    def __init__(self, s: int, max_s: int = DEFAULT_MAX_S):
        if s > max_s:
            raise ResourceLimitError(f"KR crystal bounded by s <= {max_s}, got {s}")
        self.s = s
        self.max_s = max_s
        self.rows = RowCrystal(s)
        self.A6 = tableau_crystal(6)
        self.A7 = tableau_crystal(7)
        self._psi: Optional[Dict] = None
        self._psi_inv: Optional[Dict] = None
        self._params: Dict = {}

    # -- psi -----------------------------------------------------------------

    def psi_pointwise(self, b) -> A6Image:
        """String transport: raise b, classify, lower the superstandard tableau."""
        hw, estring = raise_to_highest(self.rows, b, RAISE_ORDER)
        p = classify_i02_highest(hw)
        if p is None:
            raise AssertionError(f"{self.rows.label(hw)} is not classified as I02-highest")
        T = superstandard_of_weight(p.a6_weight())
        for i in reversed(estring):
            T = self.A6.f(T, E_TO_A6[i])
        return A6Image(p, T)

    def psi_inv_pointwise(self, T: Tableau):
        a = partition_to_weight(shape(T), 6)
        p = params_from_mu(a, self.s)
        if p is None:
            raise ValueError(f"shape {shape(T)} is not a component of B({self.s} w7)")
        hw, estring = raise_to_highest(self.A6, T, A6_COLORS)
        row = p.row()
        for i in reversed(estring):
            row = self.rows.f(row, A6_TO_E[i])
        return row

    def _build_tables(self):
        psi, inv, params = {}, {}, {}
        colors = sorted(I02)
        for p in enumerate_params(self.s):
            table = transport_component(
                self.rows, p.row(), self.A6, superstandard_of_weight(p.a6_weight()),
                colors, E_TO_A6,
            )
            for b, T in table.items():
                psi[b] = T
                inv[T] = b
                params[b] = p
        self._psi, self._psi_inv, self._params = psi, inv, params

    def psi(self, b) -> A6Image:
        if self._psi is None:
            self._build_tables()
        return A6Image(self._params[b], self._psi[b])

    def psi_tableau(self, b) -> Tableau:
        if self._psi is None:
            self._build_tables()
        return self._psi[b]

    def psi_inv(self, T: Tableau):
        if self._psi is None:
            self._build_tables()
        try:
            return self._psi_inv[T]
        except KeyError:
            raise ValueError(f"{format_tableau(T)} is not in the image of psi") from None

    def psi_a7(self, b) -> Tableau:
        """A7 tableau of b: psi image padded with 8's."""
        return pad_even_columns(self.psi_tableau(b))

    def psi_a7_inv(self, U: Tableau):
        return self.psi_inv(strip_letter(U, 8))

    # -- crystal interface -------------------------------------------------------

    def f(self, b, i):
        if i == 0:
            return self.affine_op(b, raising=False)
        return self.rows.f(b, i)

    def e(self, b, i):
        if i == 0:
            return self.affine_op(b, raising=True)
        return self.rows.e(b, i)

    def epsilon(self, b, i):
        if i == 0:
            return self.A7.epsilon(self.psi_a7(b), 7)
        return self.rows.epsilon(b, i)

    def phi(self, b, i):
        if i == 0:
            return self.A7.phi(self.psi_a7(b), 7)
        return self.rows.phi(b, i)

    def affine_op(self, b, raising: bool):
        U = self.psi_a7(b)
        U = self.A7.e(U, 7) if raising else self.A7.f(U, 7)
        if U is None:
            return None
        return self.psi_a7_inv(U)

    def weight(self, b):
        return self.rows.weight(b)

    def affine_weight(self, b):
        return affinize(self.rows.weight(b))

    def label(self, b):
        return self.rows.label(b)

    def elements(self):
        return enumerate_rows(self.s, self.max_s)


_LETTER_COLUMNS: Dict[int, Tuple[int, ...]] = {}


def letter_column(x: int) -> Tuple[int, ...]:
    """The single A6 column that psi assigns to the one-letter row (x,)."""
    if not _LETTER_COLUMNS:
        kr1 = KRCrystal(1)
        for (b,) in kr1.elements():
            (col,) = kr1.psi_tableau((b,))
            _LETTER_COLUMNS[b] = col
    return _LETTER_COLUMNS[x]


def psi_by_jdt(row, order: str = "row-major") -> Tableau:
    """Independent psi: map letters to columns and rectify, dropping full columns."""
    return drop_full_columns(rectify([letter_column(x) for x in row], order), 6)


def build_kr(s: int, max_s: int = DEFAULT_MAX_S, kr: Optional[KRCrystal] = None) -> CrystalGraph:
    """Full affine crystal graph of B^{7,s} over colors 0..7."""
    kr = kr or KRCrystal(s, max_s)
    nodes = kr.elements()
    f_edges = {}
    for b in nodes:
        for i in range(8):
            t = kr.f(b, i)
            if t is not None:
                f_edges[(b, i)] = t
    return CrystalGraph(
        nodes=nodes,
        f_edges=f_edges,
        weights={b: kr.weight(b) for b in nodes},
        index_set=I,
        root_type="E7",
        labels={b: kr.label(b) for b in nodes},
        metadata={"type": "kr", "s": s},
    )


def observed_a7_components(graph: CrystalGraph) -> List[Tuple[int, ...]]:
    """A7 weights of the I_2-highest elements of a KR graph."""
    hws = [b for b in graph.nodes if all(graph.e(b, j) is None for j in sorted(I - {2}))]
    return sorted(a7_weight(graph.weight(b)) for b in hws)


# -- E6 decomposition and the automorphism Phi -------------------------------------

CHAIN_LABELS = ("7", "7̄6", "7̄1", "7̄")


def e6_weight(mu) -> Tuple[int, ...]:
    return tuple(mu[:6])


def e6_dual(w) -> Tuple[int, ...]:
    return tuple(w[E6_TWIST[i] - 1] for i in range(1, 7))


def i07_highest_rows(s: int) -> List[Tuple[int, ...]]:
    rc = RowCrystal(s)
    return [b for b in enumerate_rows(s) if all(rc.e(b, i) is None for i in sorted(I07))]


def chain_counts(row) -> Tuple[int, int, int, int]:
    """Exponents (a, b, c, d) of 7, 7-bar 6, 7-bar 1, 7-bar in an I_{0,7}-highest row."""
    rc = RowCrystal(len(row))
    idx = [rc.L.from_label(x) for x in CHAIN_LABELS]
    counts = [sum(1 for x in row if x == k) for k in idx]
    if sum(counts) != len(row):
        raise ValueError("row is not built from the I_{0,7}-highest chain")
    return tuple(counts)


def chain_row(a: int, b: int, c: int, d: int) -> Tuple[int, ...]:
    rc = RowCrystal(a + b + c + d)
    idx = [rc.L.from_label(x) for x in CHAIN_LABELS]
    return tuple(sorted([idx[0]] * a + [idx[1]] * b + [idx[2]] * c + [idx[3]] * d))


@dataclass
class E6Report:
    s: int
    components: Dict[Tuple[int, ...], int]
    sizes: Dict[Tuple[int, ...], int]
    caption_formula_matches: bool
    count_formula_matches: bool
    highest: List[Tuple[int, ...]]

    def lines(self):
        out = [f"E6 decomposition of B({self.s} w7):"]
        for w in sorted(self.components):
            out.append(f"  B{w}: multiplicity {self.components[w]}, dimension {self.sizes[w]}")
        out.append(f"  multiplicity = s - m76 - m71      : {'matches' if self.caption_formula_matches else 'does not match'}")
        out.append(f"  multiplicity = s - m76 - m71 + 1  : {'matches' if self.count_formula_matches else 'does not match'}")
        return out


def e6_decomposition(s: int) -> E6Report:
    hws = i07_highest_rows(s)
    rc = RowCrystal(s)
    comps = Counter(e6_weight(rc.weight(b)) for b in hws)
    sizes = {w: weyl_dimension(E6_CARTAN, w) for w in comps}
    caption = all(m == s - w[5] - w[0] for w, m in comps.items())
    counted = all(m == s - w[5] - w[0] + 1 for w, m in comps.items())
    return E6Report(s, dict(comps), sizes, caption, counted, hws)


class PhiAutomorphism:
    """The twisted I_{0,7} automorphism of B^{7,s}.

    On I_{0,7}-highest rows it matches E6-dual weights and swaps the
    alpha_7 / alpha_0 pairings; elsewhere it transports f-strings with the E6
    diagram twist.
    """

    def __init__(self, s: int):
        self.s = s
        self.rows = RowCrystal(s)
        self.highest = i07_highest_rows(s)
        by_data = {}
        for h in self.highest:
            by_data[self._data(h)] = h
        self.match = {}
        for h in self.highest:
            w6, p7, p0 = self._data(h)
            target = by_data.get((e6_dual(w6), p0, p7))
            if target is None:
                raise AssertionError(f"no matching component for {self.rows.label(h)}")
            self.match[h] = target
        self._table = None

    def _data(self, h):
        mu = self.rows.weight(h)
        return e6_weight(mu), pairing(mu, 7), pairing(mu, 0)

    def pointwise(self, b):
        hw, estring = raise_to_highest(self.rows, b, sorted(I07))
        image = self.match[hw]
        for i in reversed(estring):
            image = self.rows.f(image, E6_TWIST[i])
        return image

    def table(self) -> Dict:
        if self._table is None:
            table = {}
            for h in self.highest:
                table.update(transport_component(
                    self.rows, h, self.rows, self.match[h], sorted(I07), E6_TWIST,
                ))
            self._table = table
        return self._table

    def __call__(self, b):
        return self.table()[b]


def phi_automorphism(b, s: Optional[int] = None):
    return PhiAutomorphism(len(b) if s is None else s).pointwise(b)


def phi_via_sigma(kr: KRCrystal, b):
    """psi^{-1} o sigma o psi with psi the padded A7 map."""
    return kr.psi_a7_inv(sigma(kr.psi_a7(b), 7))


@dataclass
class PrintedPhiReport:
    s: int
    rows: List[Dict]

    @property
    def printed_preserves_length(self) -> bool:
        return all(r["printed_length"] == self.s for r in self.rows)

    @property
    def printed_matches(self) -> bool:
        return all(r["printed"] == r["observed"] for r in self.rows)

    @property
    def reversed_matches(self) -> bool:
        return all(r["reversed"] == r["observed"] for r in self.rows)

    def lines(self):
        out = [f"Phi on I07-highest rows of B^(7,{self.s}) as exponents (a,b,c,d) of 7, 7̄6, 7̄1, 7̄:"]
        for r in self.rows:
            out.append(
                f"  {r['source']} -> observed {r['observed']}, printed {r['printed']}"
                f" (length {r['printed_length']}), pattern (d,c,b,a) {r['reversed']}"
            )
        out.append(f"  printed exponents preserve length: {self.printed_preserves_length}")
        out.append(f"  printed exponents match: {self.printed_matches}")
        out.append(f"  pattern (d,c,b,a) matches: {self.reversed_matches}")
        return out


def printed_phi_report(s: int, phi: Optional[PhiAutomorphism] = None) -> PrintedPhiReport:
    phi = phi or PhiAutomorphism(s)
    out = []
    for h in phi.highest:
        a, b, c, d = chain_counts(h)
        printed = (b + c + d, c, b, a + b + c)
        out.append({
            "source": (a, b, c, d),
            "observed": chain_counts(phi.match[h]),
            "printed": printed,
            "printed_length": sum(printed),
            "reversed": (d, c, b, a),
        })
    return PrintedPhiReport(s, out)
