"""Composition graphs G_k(w): the fixed-point enlargement, transitive reduction, loops."""

from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Set, Tuple

import networkx as nx

from ..crystal_core import letters_E7
from ..rows import poset_le
from .branching import adjoint_indexed, adjoint_square_members


@dataclass
class CompositionGraph:
    vertices: List[Hashable]
    edges: Set[Tuple[Hashable, Hashable]]
    loops: Set[Hashable]
    labels: Dict[Hashable, str] = field(default_factory=dict)
    compact: Dict[Hashable, str] = field(default_factory=dict)

    @property
    def loop_free(self) -> List[Hashable]:
        return [v for v in self.vertices if v not in self.loops]

    def label(self, v) -> str:
        return self.labels.get(v, str(v))

    def labelled_edges(self) -> Set[Tuple[str, str]]:
        return {(self.label(a), self.label(b)) for a, b in self.edges}

    def lines(self) -> List[str]:
        out = [
            f"{len(self.vertices)} vertices, {len(self.edges)} edges, "
            f"{len(self.loop_free)} loop-free",
        ]
        for a, b in sorted(self.labelled_edges()):
            out.append(f"  {a}  ->  {b}")
        for v in self.loop_free:
            out.append(f"  no loop at {self.label(v)}")
        return out

    def to_dot(self) -> str:
        ids = {v: k for k, v in enumerate(self.vertices)}
        out = ["digraph G {"]
        for v in self.vertices:
            out.append(f'  {ids[v]} [label="{self.label(v)}"];')
        for a, b in sorted((ids[a], ids[b]) for a, b in self.edges):
            out.append(f"  {a} -> {b};")
        for v in sorted(ids[v] for v in self.loops):
            out.append(f"  {v} -> {v};")
        out.append("}")
        return "\n".join(out) + "\n"

    def to_dict(self) -> Dict:
        return {
            "vertices": [self.label(v) for v in self.vertices],
            "edges": sorted([a, b] for a, b in self.labelled_edges()),
            "loops": sorted(self.label(v) for v in self.loops),
            "loop_free": [self.label(v) for v in self.loop_free],
        }


def composition_graph(base, J: Iterable[int], le: Callable[[Hashable, Hashable], bool],
                      elements: Optional[List] = None) -> CompositionGraph:
    """Smallest acyclic graph with loops carrying the (I_0 \\ J)-highest sequences.

    ``base`` is a crystal whose elements are ``elements`` (defaults to
    ``base.nodes``); ``le(x, y)`` decides whether x (x) y lies in B(2w).
    """
    J = set(J)
    I = sorted(base.index_set)
    ImJ = [i for i in I if i not in J]
    pool = list(base.nodes if elements is None else elements)

    verts = [b for b in pool if all(base.e(b, i) is None for i in ImJ)]
    present = set(verts)
    edges = {(a, b) for a in verts for b in verts if le(a, b)}
    num = -1
    while num != len(present):
        num = len(present)
        snapshot = list(verts)
        for b in pool:
            ep = {i for i in I if base.epsilon(b, i) > 0}
            jplus = set(J) | {
                i for i in ImJ
                if any(base.phi(bp, i) > 0 and le(b, bp) for bp in snapshot)
            }
            if ep <= jplus:
                if b not in present:
                    present.add(b)
                    verts.append(b)
                for bp in snapshot:
                    if le(b, bp):
                        edges.add((b, bp))
    loops = {a for a, b in edges if a == b}
    G = nx.DiGraph()
    G.add_nodes_from(verts)
    G.add_edges_from((a, b) for a, b in edges if a != b)
    if not nx.is_directed_acyclic_graph(G):
        raise ValueError("comparison relation has a cycle; no composition graph")
    R = nx.transitive_reduction(G)
    order = sorted(verts, key=lambda v: pool.index(v))
    return CompositionGraph(
        vertices=order,
        edges=set(R.edges()),
        loops=loops,
        labels={v: base.label(v) for v in order},
        compact={v: compact_label(base, v) for v in order},
    )


def compact_label(base, b) -> str:
    """k once per unit of phi_k(b), k-bar once per unit of epsilon_k(b)."""
    bars = "".join((str(i) + "̄") * base.epsilon(b, i) for i in sorted(base.index_set))
    plain = "".join(str(i) * base.phi(b, i) for i in sorted(base.index_set))
    return bars + plain


# -- the standard instances ----------------------------------------------------------

def letter_composition_graph(k: int) -> CompositionGraph:
    """G_k(w7): letters of B(w7), le = multichain order."""
    L = letters_E7()
    return composition_graph(L, {k}, poset_le)


def adjoint_composition_graph(k: int = 2) -> CompositionGraph:
    """G_k(w1) over the 133 elements of B(w1), le = membership in B(2 w1)."""
    A = adjoint_indexed()
    members = adjoint_square_members()
    return composition_graph(A, {k}, lambda x, y: (x, y) in members,
                             elements=list(range(len(A))))


# Vertices of the G_2(w1) drawing: id -> (element label, compact label).
G2_VERTICES: Dict[str, Tuple[str, str]] = {
    "b71t7": ("7̄1 ⊗ 7", "1"),
    "b1b73t7": ("1̄7̄3 ⊗ 7", "1̄3"),
    "b3b74t7": ("3̄7̄4 ⊗ 7", "3̄4"),
    "b4b725t7": ("4̄7̄25 ⊗ 7", "4̄25"),
    "b5b726t7": ("5̄7̄26 ⊗ 7", "5̄26"),
    "b62t7": ("6̄2 ⊗ 7", "6̄27"),
    "b62tb76": ("6̄2 ⊗ 7̄6", "7̄2"),
    "b2b75t7": ("2̄7̄5 ⊗ 7", "2̄5"),
    "b2b5b746t7": ("2̄5̄7̄46 ⊗ 7", "2̄5̄46"),
    "b2b64t7": ("2̄6̄4 ⊗ 7", "2̄6̄47"),
    "b2b64tb76": ("2̄6̄4 ⊗ 7̄6", "2̄7̄4"),
    "b4b736t7": ("4̄7̄36 ⊗ 7", "4̄36"),
    "b4b635t7": ("4̄6̄35 ⊗ 7", "4̄6̄357"),
    "b4b635tb76": ("4̄6̄35 ⊗ 7̄6", "4̄7̄35"),
    "b412t7": ("4̄12 ⊗ 7", "4̄127"),
    "b412tb76": ("4̄12 ⊗ 7̄6", "4̄7̄126"),
    "b32tb423": ("3̄2 ⊗ 4̄23", "4̄22"),
    "b21t7": ("2̄1 ⊗ 7", "2̄17"),
    "b21tb76": ("2̄1 ⊗ 7̄6", "2̄7̄16"),
    "b32tb23": ("3̄2 ⊗ 2̄3", "2̄2"),
    "b2b34tb23": ("2̄3̄4 ⊗ 2̄3", "2̄2̄4"),
    "b67tb26": ("6̄7 ⊗ 2̄6", "2̄7"),
}

G2_EDGES: Tuple[Tuple[str, str], ...] = (
    ("b71t7", "b1b73t7"),
    ("b1b73t7", "b3b74t7"),
    ("b3b74t7", "b4b725t7"),
    ("b4b725t7", "b5b726t7"),
    ("b5b726t7", "b62t7"),
    ("b62t7", "b62tb76"),
    ("b4b725t7", "b2b75t7"),
    ("b5b726t7", "b2b5b746t7"),
    ("b62t7", "b2b64t7"),
    ("b62tb76", "b2b64tb76"),
    ("b2b75t7", "b2b5b746t7"),
    ("b2b5b746t7", "b2b64t7"),
    ("b2b64t7", "b2b64tb76"),
    ("b2b5b746t7", "b4b736t7"),
    ("b2b64t7", "b4b635t7"),
    ("b2b64tb76", "b4b635tb76"),
    ("b4b736t7", "b4b635t7"),
    ("b4b635t7", "b4b635tb76"),
    ("b4b635t7", "b412t7"),
    ("b4b635tb76", "b412tb76"),
    ("b412t7", "b412tb76"),
    ("b412tb76", "b32tb423"),
    ("b412t7", "b21t7"),
    ("b412tb76", "b21tb76"),
    ("b32tb423", "b32tb23"),
    ("b32tb23", "b2b34tb23"),
    ("b21t7", "b21tb76"),
    ("b21tb76", "b2b34tb23"),
    ("b2b34tb23", "b67tb26"),
)
G2_LOOP_FREE = ("b32tb23",)


def g2_edges_labelled() -> Set[Tuple[str, str]]:
    return {(G2_VERTICES[a][0], G2_VERTICES[b][0]) for a, b in G2_EDGES}


# The x-letter diagram with its arrows reversed: x_i -> x_j when x_i <= x_j.
X_CHAIN_EDGES: Tuple[Tuple[str, str], ...] = (
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x3", "x4p"),
    ("x4", "x5"), ("x4p", "x5"), ("x5", "x6"), ("x6", "x7"),
)

# The four I_{0,7}-highest letters, in chain order.
E6_CHAIN = ("7", "7̄6", "7̄1", "7̄")


def x_chain_edges_labelled() -> Set[Tuple[str, str]]:
    from ..rows import X_LABELS
    return {(X_LABELS[a], X_LABELS[b]) for a, b in X_CHAIN_EDGES}


def e6_chain_edges_labelled() -> Set[Tuple[str, str]]:
    return {(E6_CHAIN[k], E6_CHAIN[k + 1]) for k in range(3)}
