"""Finite crystal machinery.

Tensor convention: a word ``(b_L, ..., b_1)`` is stored left to right as it is
written, and the signature string lists the leftmost factor first.  Each
factor contributes ``-`` phi_i times followed by ``+`` epsilon_i times; ``+-``
pairs cancel, f_i acts on the rightmost surviving ``-`` and e_i on the
leftmost surviving ``+``.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from . import cartan
from .cartan import I0

BAR = "̄"
_BARS = ("̄", "̅")


class ResourceLimitError(RuntimeError):
    """Requested object exceeds the configured size bound."""


class NotIsomorphicError(ValueError):
    pass


# -- signature rule -------------------------------------------------------------

def signature_f_position(word, i, phi, eps) -> Optional[int]:
    """Index of the factor f_i acts on, or None."""
    plus = 0
    pos = None
    for k, b in enumerate(word):
        p = phi(b, i)
        if p > plus:
            pos = k
            plus = 0
        else:
            plus -= p
        plus += eps(b, i)
    return pos


def signature_e_position(word, i, phi, eps) -> Optional[int]:
    """Index of the factor e_i acts on, or None."""
    minus = 0
    pos = None
    for k in range(len(word) - 1, -1, -1):
        b = word[k]
        e = eps(b, i)
        if e > minus:
            pos = k
            minus = 0
        else:
            minus -= e
        minus += phi(b, i)
    return pos


def signature_counts(word, i, phi, eps) -> Tuple[int, int]:
    """(epsilon_i, phi_i) of a tensor word: surviving + and - after cancellation."""
    plus = 0
    minus = 0
    for b in word:
        p = phi(b, i)
        cancel = min(plus, p)
        plus -= cancel
        minus += p - cancel
        plus += eps(b, i)
    return plus, minus


def reduced_signature(word, i, phi, eps) -> str:
    """The reduced signature as a string of '-' then '+'."""
    e, p = signature_counts(word, i, phi, eps)
    return "-" * p + "+" * e


# -- crystals -------------------------------------------------------------------

class Crystal:
    """Minimal interface: subclasses provide e, f, weight and index_set.

    epsilon/phi default to string lengths; seminormal crystals only.
    """

    index_set: frozenset = frozenset()
    root_type: object = "E7"

    def e(self, b, i):
        raise NotImplementedError

    def f(self, b, i):
        raise NotImplementedError

    def weight(self, b):
        raise NotImplementedError

    def epsilon(self, b, i) -> int:
        k = 0
        b = self.e(b, i)
        while b is not None:
            k += 1
            b = self.e(b, i)
        return k

    def phi(self, b, i) -> int:
        k = 0
        b = self.f(b, i)
        while b is not None:
            k += 1
            b = self.f(b, i)
        return k

    def label(self, b) -> str:
        return str(b)

    def _check_color(self, i):
        if i not in self.index_set:
            raise ValueError(f"color {i} not in index set {sorted(self.index_set)}")

    def crystal_op(self, b, i, raising: bool):
        self._check_color(i)
        return self.e(b, i) if raising else self.f(b, i)


def letter_label(weight: Sequence[int]) -> str:
    """Compact label: barred nodes (ascending) then unbarred nodes (ascending)."""
    neg = "".join(f"{k + 1}{BAR}" for k, c in enumerate(weight) if c < 0)
    pos = "".join(f"{k + 1}" for k, c in enumerate(weight) if c > 0)
    return neg + pos if (neg or pos) else "0"


def parse_letter_label(text: str, rank: int = 7) -> Tuple[int, ...]:
    """Inverse of letter_label.  Also accepts '-k' for a barred k."""
    w = [0] * rank
    chars = text.replace(" ", "")
    k = 0
    while k < len(chars):
        ch = chars[k]
        neg = False
        if ch == "-":
            neg = True
            k += 1
            ch = chars[k] if k < len(chars) else ""
        if not ch.isdigit() or not 1 <= int(ch) <= rank:
            raise ValueError(f"bad letter label {text!r}")
        node = int(ch)
        k += 1
        if k < len(chars) and chars[k] in _BARS:
            neg = True
            k += 1
        w[node - 1] += -1 if neg else 1
    return tuple(w)


class LetterCrystal(Crystal):
    """The minuscule crystal B(w7) of E7, elements are ints 0..55.

    Index order is a linear extension of the crystal poset (depth from the
    highest weight letter, ties broken by weight), so sorting rows by index
    sorts them as multichains.
    """

    index_set = I0

    def __init__(self):
        top = (0, 0, 0, 0, 0, 0, 1)
        depth = {top: 0}
        queue = deque([top])
        while queue:
            mu = queue.popleft()
            for i in sorted(I0):
                if mu[i - 1] == 1:
                    nu = tuple(m - a for m, a in zip(mu, cartan.simple_root(i)))
                    if nu not in depth:
                        depth[nu] = depth[mu] + 1
                        queue.append(nu)
        order = sorted(depth, key=lambda w: (depth[w], tuple(-c for c in w)))
        self.weights: List[Tuple[int, ...]] = order
        self.depth = [depth[w] for w in order]
        self.index_of: Dict[Tuple[int, ...], int] = {w: k for k, w in enumerate(order)}
        n = len(order)
        self._f = {i: [None] * n for i in range(8)}
        self._e = {i: [None] * n for i in range(8)}
        for k, mu in enumerate(order):
            for i in I0:
                if mu[i - 1] == 1:
                    nu = tuple(m - a for m, a in zip(mu, cartan.simple_root(i)))
                    t = self.index_of[nu]
                    self._f[i][k] = t
                    self._e[i][t] = k
        self._eps = {i: [max(-w[i - 1], 0) for w in order] for i in I0}
        self._phi = {i: [max(w[i - 1], 0) for w in order] for i in I0}
        self._labels = [letter_label(w) for w in order]

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(range(len(self.weights)))

    def e(self, b, i):
        return self._e[i][b]

    def f(self, b, i):
        return self._f[i][b]

    def epsilon(self, b, i):
        return self._eps[i][b]

    def phi(self, b, i):
        return self._phi[i][b]

    def weight(self, b):
        return self.weights[b]

    def label(self, b):
        return self._labels[b]

    def from_label(self, text: str) -> int:
        return self.index_of[parse_letter_label(text)]

    @property
    def highest(self) -> int:
        return 0

    @property
    def lowest(self) -> int:
        return len(self.weights) - 1


_LETTERS: Optional[LetterCrystal] = None


def letters() -> LetterCrystal:
    """Shared immutable instance of B(w7)."""
    global _LETTERS
    if _LETTERS is None:
        _LETTERS = LetterCrystal()
    return _LETTERS


class TensorProductCrystal(Crystal):
    """Factors given left to right; elements are tuples in the same order."""

    def __init__(self, factors: Sequence[Crystal]):
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = tuple(factors)
        self.index_set = frozenset.intersection(*(frozenset(c.index_set) for c in factors))
        self.root_type = factors[0].root_type

    def _phi(self, pair, i):
        return self.factors[pair[0]].phi(pair[1], i)

    def _eps(self, pair, i):
        return self.factors[pair[0]].epsilon(pair[1], i)

    def f(self, b, i):
        word = list(enumerate(b))
        k = signature_f_position(word, i, self._phi, self._eps)
        if k is None:
            return None
        new = self.factors[k].f(b[k], i)
        return b[:k] + (new,) + b[k + 1:]

    def e(self, b, i):
        word = list(enumerate(b))
        k = signature_e_position(word, i, self._phi, self._eps)
        if k is None:
            return None
        new = self.factors[k].e(b[k], i)
        return b[:k] + (new,) + b[k + 1:]

    def epsilon(self, b, i):
        return signature_counts(list(enumerate(b)), i, self._phi, self._eps)[0]

    def phi(self, b, i):
        return signature_counts(list(enumerate(b)), i, self._phi, self._eps)[1]

    def weight(self, b):
        ws = [c.weight(x) for c, x in zip(self.factors, b)]
        return tuple(map(sum, zip(*ws)))

    def label(self, b):
        return " ⊗ ".join(c.label(x) for c, x in zip(self.factors, b))


# -- graphs ---------------------------------------------------------------------

def _root_of(root_type, i):
    if root_type == "E7":
        return cartan.simple_root(i)
    _, n = root_type
    return cartan.cartan_matrix_A(n)[i - 1]


def _pairing_of(root_type, weight, i):
    if root_type == "E7":
        return cartan.pairing(weight, i)
    return weight[i - 1]


@dataclass
class CrystalGraph:
    """Finite edge-coloured digraph with weights; edges are the f_i arrows.

    ``nodes`` is kept in canonical order.  ``root_type`` is ``"E7"`` (classical
    E7 weights, color 0 handled through the level-zero lift) or ``("A", n)``.
    """

    nodes: List[Hashable]
    f_edges: Dict[Tuple[Hashable, int], Hashable]
    weights: Dict[Hashable, Tuple[int, ...]]
    index_set: frozenset
    root_type: object = "E7"
    labels: Dict[Hashable, str] = field(default_factory=dict)
    metadata: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        self.e_edges = {(t, i): b for (b, i), t in self.f_edges.items()}
        self._pos = {b: k for k, b in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, b):
        return b in self._pos

    def index(self, b) -> int:
        return self._pos[b]

    def f(self, b, i):
        return self.f_edges.get((b, i))

    def e(self, b, i):
        return self.e_edges.get((b, i))

    def epsilon(self, b, i) -> int:
        k = 0
        while (b, i) in self.e_edges:
            b = self.e_edges[(b, i)]
            k += 1
        return k

    def phi(self, b, i) -> int:
        k = 0
        while (b, i) in self.f_edges:
            b = self.f_edges[(b, i)]
            k += 1
        return k

    def weight(self, b):
        return self.weights[b]

    def label(self, b) -> str:
        return self.labels.get(b, str(b))

    def edges(self) -> List[Tuple[Hashable, int, Hashable]]:
        """All edges (source, color, target) in canonical order."""
        out = [(b, i, t) for (b, i), t in self.f_edges.items()]
        out.sort(key=lambda x: (self._pos[x[0]], x[1]))
        return out

    def edge_count(self, color: Optional[int] = None) -> int:
        if color is None:
            return len(self.f_edges)
        return sum(1 for (_, i) in self.f_edges if i == color)

    def axiom_violations(self, limit: int = 20) -> List[str]:
        """Check seminormal crystal axioms (1)-(3) exhaustively."""
        bad = []
        for (b, i), t in self.f_edges.items():
            if i not in self.index_set:
                bad.append(f"edge color {i} outside index set")
            expect = tuple(w - a for w, a in zip(self.weights[b], _root_of(self.root_type, i)))
            if self.weights[t] != expect:
                bad.append(f"wt(f_{i} {self.label(b)}) != wt - alpha_{i}")
            if len(bad) >= limit:
                return bad
        seen_targets = {}
        for (b, i), t in self.f_edges.items():
            if (t, i) in seen_targets:
                bad.append(f"two {i}-edges into {self.label(t)}")
            seen_targets[(t, i)] = b
        for b in self.nodes:
            for i in self.index_set:
                if self.phi(b, i) - self.epsilon(b, i) != _pairing_of(self.root_type, self.weights[b], i):
                    bad.append(f"phi_{i} - eps_{i} != <alpha_{i}^vee, wt> at {self.label(b)}")
                    if len(bad) >= limit:
                        return bad
        return bad

    def components(self, colors: Iterable[int]) -> List[List[Hashable]]:
        """Connected components under the given colors, each canonically sorted."""
        colors = list(colors)
        seen = set()
        comps = []
        for b in self.nodes:
            if b in seen:
                continue
            comp = [b]
            seen.add(b)
            stack = [b]
            while stack:
                x = stack.pop()
                for i in colors:
                    for y in (self.f_edges.get((x, i)), self.e_edges.get((x, i))):
                        if y is not None and y not in seen:
                            seen.add(y)
                            comp.append(y)
                            stack.append(y)
            comp.sort(key=self._pos.__getitem__)
            comps.append(comp)
        return comps

    def is_connected(self, colors: Optional[Iterable[int]] = None) -> bool:
        return len(self.components(self.index_set if colors is None else colors)) == 1

    def sources(self) -> List[Hashable]:
        return [b for b in self.nodes if not any((b, i) in self.e_edges for i in self.index_set)]

    def sinks(self) -> List[Hashable]:
        return [b for b in self.nodes if not any((b, i) in self.f_edges for i in self.index_set)]

    def longest_path(self) -> int:
        """Length of the longest directed path (graph must be acyclic)."""
        indeg = {b: 0 for b in self.nodes}
        for (_, _), t in self.f_edges.items():
            indeg[t] += 1
        dist = {b: 0 for b in self.nodes}
        queue = deque(b for b in self.nodes if indeg[b] == 0)
        out = {}
        for (b, _), t in self.f_edges.items():
            out.setdefault(b, []).append(t)
        while queue:
            b = queue.popleft()
            for t in out.get(b, ()):
                dist[t] = max(dist[t], dist[b] + 1)
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        return max(dist.values())


def generate_subcrystal(crystal, generators: Sequence, colors: Optional[Iterable[int]] = None,
                        lower_only: bool = False, max_nodes: Optional[int] = None,
                        sort_key: Optional[Callable] = None) -> CrystalGraph:
    """Closure of ``generators`` under e_i, f_i for i in ``colors``.

    ``lower_only`` closes under f_i only, which suffices for highest weight
    generators.
    """
    if not generators:
        raise ValueError("need at least one generator")
    colors = sorted(crystal.index_set if colors is None else colors)
    seen = set(generators)
    order = list(dict.fromkeys(generators))
    queue = deque(order)
    f_edges = {}
    while queue:
        b = queue.popleft()
        for i in colors:
            t = crystal.f(b, i)
            if t is not None:
                f_edges[(b, i)] = t
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    queue.append(t)
            if not lower_only:
                s = crystal.e(b, i)
                if s is not None and s not in seen:
                    seen.add(s)
                    order.append(s)
                    queue.append(s)
        if max_nodes is not None and len(seen) > max_nodes:
            raise ResourceLimitError(f"subcrystal exceeds {max_nodes} nodes")
    if not lower_only:
        # e-discovered nodes may own f-edges not yet recorded
        for b in order:
            for i in colors:
                if (b, i) not in f_edges:
                    t = crystal.f(b, i)
                    if t is not None:
                        f_edges[(b, i)] = t
    order.sort(key=sort_key if sort_key is not None else _default_key)
    return CrystalGraph(
        nodes=order,
        f_edges=f_edges,
        weights={b: crystal.weight(b) for b in order},
        index_set=frozenset(colors),
        root_type=getattr(crystal, "root_type", "E7"),
        labels={b: crystal.label(b) for b in order},
    )


def _default_key(b):
    return b


def highest_weight_elements(graph, J: Iterable[int], elements: Optional[Iterable] = None) -> List:
    """All b with epsilon_j(b) = 0 for j in J, in canonical order.

    ``graph`` may be a CrystalGraph or any crystal; with a crystal, pass the
    ``elements`` to scan.
    """
    J = list(J)
    pool = graph.nodes if elements is None else list(elements)
    return [b for b in pool if all(graph.e(b, j) is None for j in J)]


def letters_E7() -> CrystalGraph:
    """The 56-element graph of B(w7)."""
    L = letters()
    return generate_subcrystal(L, [L.highest], I0)


# -- strings and isomorphisms -------------------------------------------------------

def raise_to_highest(crystal, b, colors: Sequence[int]) -> Tuple[object, List[int]]:
    """Apply e_i (scanning ``colors`` in order, repeatedly) until highest.

    Returns (highest element, list of colors in the order e's were applied).
    """
    string = []
    moved = True
    while moved:
        moved = False
        for i in colors:
            c = crystal.e(b, i)
            while c is not None:
                string.append(i)
                b = c
                moved = True
                c = crystal.e(b, i)
    return b, string


def apply_f_string(crystal, b, string: Iterable[int]):
    """Apply f_i for i in ``string`` in order; None if any step vanishes."""
    for i in string:
        if b is None:
            return None
        b = crystal.f(b, i)
    return b


def match_isomorphism(src, src_hw, tgt, tgt_hw, colors: Sequence[int],
                      dictionary: Optional[Dict[int, int]] = None) -> Callable:
    """Map b in the component of ``src_hw`` to the image under the unique
    isomorphism sending src_hw to tgt_hw, relabelling colors by ``dictionary``.

    Works by f-string transport: b = f_{i_1}...f_{i_k} src_hw goes to
    f_{d(i_1)}...f_{d(i_k)} tgt_hw.
    """
    colors = list(colors)
    dictionary = dictionary or {i: i for i in colors}

    def transport(b):
        hw, estring = raise_to_highest(src, b, colors)
        if hw != src_hw:
            raise ValueError("element not in the component of the source generator")
        image = tgt_hw
        for i in reversed(estring):
            image = tgt.f(image, dictionary[i])
            if image is None:
                raise NotIsomorphicError("components not isomorphic")
        return image

    return transport


def transport_component(src, src_hw, tgt, tgt_hw, colors: Sequence[int],
                        dictionary: Optional[Dict[int, int]] = None) -> Dict:
    """Bulk version of match_isomorphism: BFS both components in lockstep."""
    dictionary = dictionary or {i: i for i in colors}
    table = {src_hw: tgt_hw}
    queue = deque([src_hw])
    while queue:
        b = queue.popleft()
        image = table[b]
        for i in colors:
            c = src.f(b, i)
            if c is None:
                if tgt.f(image, dictionary[i]) is not None:
                    raise NotIsomorphicError("components not isomorphic")
                continue
            if c in table:
                continue
            d = tgt.f(image, dictionary[i])
            if d is None:
                raise NotIsomorphicError("components not isomorphic")
            table[c] = d
            queue.append(c)
    return table


def reachability(graph: CrystalGraph) -> Dict[Hashable, frozenset]:
    """Down-set closure: reach[b] = all b' reachable from b by f-arrows (incl. b)."""
    out = {}
    indeg = {b: 0 for b in graph.nodes}
    for (b, _), t in graph.f_edges.items():
        if t not in out.setdefault(b, set()):
            out[b].add(t)
            indeg[t] += 1
    topo = []
    queue = deque(b for b in graph.nodes if indeg[b] == 0)
    while queue:
        b = queue.popleft()
        topo.append(b)
        for t in out.get(b, ()):
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    if len(topo) != len(graph.nodes):
        raise ValueError("crystal graph has a directed cycle")
    reach = {}
    for b in reversed(topo):
        acc = {b}
        for t in out.get(b, ()):
            acc |= reach[t]
        reach[b] = frozenset(acc)
    return reach


class IndexedCrystal(Crystal):
    """A CrystalGraph re-encoded on ints 0..n-1 with lookup tables."""

    def __init__(self, graph: CrystalGraph):
        self.graph = graph
        self.index_set = graph.index_set
        self.root_type = graph.root_type
        self.nodes = list(graph.nodes)
        pos = {b: k for k, b in enumerate(self.nodes)}
        self.pos = pos
        n = len(self.nodes)
        self._f = {i: [None] * n for i in graph.index_set}
        self._e = {i: [None] * n for i in graph.index_set}
        for (b, i), t in graph.f_edges.items():
            self._f[i][pos[b]] = pos[t]
            self._e[i][pos[t]] = pos[b]
        self._eps = {i: [graph.epsilon(b, i) for b in self.nodes] for i in graph.index_set}
        self._phi = {i: [graph.phi(b, i) for b in self.nodes] for i in graph.index_set}
        self.weights = [graph.weights[b] for b in self.nodes]
        self._labels = [graph.label(b) for b in self.nodes]

    def __len__(self):
        return len(self.nodes)

    def f(self, b, i):
        return self._f[i][b]

    def e(self, b, i):
        return self._e[i][b]

    def epsilon(self, b, i):
        return self._eps[i][b]

    def phi(self, b, i):
        return self._phi[i][b]

    def weight(self, b):
        return self.weights[b]

    def label(self, b):
        return self._labels[b]


class TensorPowerCrystal(Crystal):
    """k-fold tensor power of an IndexedCrystal; elements are k-tuples of ints."""

    def __init__(self, base: IndexedCrystal, k: int):
        self.base = base
        self.k = k
        self.index_set = base.index_set
        self.root_type = base.root_type

    def f(self, word, i):
        phi = self.base._phi[i]
        eps = self.base._eps[i]
        plus = 0
        pos = -1
        for k, b in enumerate(word):
            p = phi[b]
            if p > plus:
                pos = k
                plus = 0
            else:
                plus -= p
            plus += eps[b]
        if pos < 0:
            return None
        return word[:pos] + (self.base._f[i][word[pos]],) + word[pos + 1:]

    def e(self, word, i):
        phi = self.base._phi[i]
        eps = self.base._eps[i]
        minus = 0
        pos = -1
        for k in range(len(word) - 1, -1, -1):
            b = word[k]
            x = eps[b]
            if x > minus:
                pos = k
                minus = 0
            else:
                minus -= x
            minus += phi[b]
        if pos < 0:
            return None
        return word[:pos] + (self.base._e[i][word[pos]],) + word[pos + 1:]

    def epsilon(self, word, i):
        return signature_counts(word, i, self.base.phi, self.base.epsilon)[0]

    def phi(self, word, i):
        return signature_counts(word, i, self.base.phi, self.base.epsilon)[1]

    def weight(self, word):
        w = [0] * len(self.base.weights[0]) if self.base.weights else []
        for b in word:
            for t, c in enumerate(self.base.weights[b]):
                w[t] += c
        return tuple(w)

    def label(self, word):
        return " ⊗ ".join(self.base.label(b) for b in word)


def lower_closure(crystal, generator, colors: Iterable[int], max_nodes: Optional[int] = None) -> List:
    """All elements reachable from ``generator`` by f-arrows (BFS order)."""
    colors = sorted(colors)
    seen = {generator}
    order = [generator]
    k = 0
    while k < len(order):
        b = order[k]
        k += 1
        for i in colors:
            t = crystal.f(b, i)
            if t is not None and t not in seen:
                seen.add(t)
                order.append(t)
        if max_nodes is not None and len(order) > max_nodes:
            raise ResourceLimitError(f"component exceeds {max_nodes} nodes")
    return order
