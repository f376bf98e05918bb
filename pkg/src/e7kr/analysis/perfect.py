"""Perfectness of B^{7,s}: minimal elements and tensor-square connectivity."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..cartan import enumerate_level_weights, level
from ..kr import KRCrystal

# Above this many pairs the tensor-square connectivity check is skipped.
DEFAULT_SQUARE_BUDGET = 5_000_000


def eps_phi_affine(kr: KRCrystal, b) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(epsilon(b), phi(b)) as affine weights on Lambda_0..Lambda_7."""
    eps = tuple(kr.epsilon(b, i) for i in range(8))
    phi = tuple(kr.phi(b, i) for i in range(8))
    return eps, phi


@dataclass
class PerfectnessReport:
    s: int
    min_elements: List = field(default_factory=list)
    eps_image: set = field(default_factory=set)
    phi_image: set = field(default_factory=set)
    level_weights: int = 0
    min_level: Optional[int] = None
    connected_square: Optional[bool] = None
    square_notice: str = ""
    reasons: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.reasons

    def lines(self) -> List[str]:
        out = [
            f"s = {self.s}",
            f"min level(eps) = {self.min_level}",
            f"|B_min| = {len(self.min_elements)}",
            f"|P_s^+| = {self.level_weights}",
            f"eps(B_min) = P_s^+: {len(self.eps_image) == self.level_weights}",
            f"phi(B_min) = P_s^+: {len(self.phi_image) == self.level_weights}",
        ]
        if self.connected_square is None:
            out.append(f"tensor square: skipped ({self.square_notice})")
        else:
            out.append(f"tensor square connected: {self.connected_square}")
        out.append(f"verdict: {'perfect' if self.verdict else 'NOT perfect'}")
        out.extend(f"  failure: {r}" for r in self.reasons)
        return out

    def to_dict(self) -> Dict:
        return {
            "s": self.s,
            "min_level": self.min_level,
            "b_min": len(self.min_elements),
            "level_weights": self.level_weights,
            "eps_image": sorted(list(w) for w in self.eps_image),
            "phi_image": sorted(list(w) for w in self.phi_image),
            "connected_square": self.connected_square,
            "square_notice": self.square_notice,
            "verdict": self.verdict,
            "reasons": list(self.reasons),
        }


def _tables(kr: KRCrystal, elements):
    pos = {b: k for k, b in enumerate(elements)}
    n = len(elements)
    eps = np.zeros((8, n), dtype=np.int64)
    phi = np.zeros((8, n), dtype=np.int64)
    fidx = np.full((8, n), -1, dtype=np.int64)
    for k, b in enumerate(elements):
        for i in range(8):
            eps[i, k] = kr.epsilon(b, i)
            phi[i, k] = kr.phi(b, i)
            t = kr.f(b, i)
            if t is not None:
                fidx[i, k] = pos[t]
    return eps, phi, fidx


def tensor_square_connected(eps, phi, fidx) -> bool:
    """Weak connectivity of B (x) B under f_0..f_7 (signature rule).

    Pair (x, y) with x on the left: f_i acts on y if phi_i(y) > eps_i(x),
    otherwise on x.
    """
    n = eps.shape[1]
    X = np.repeat(np.arange(n), n)
    Y = np.tile(np.arange(n), n)
    src = X * n + Y
    rows, cols = [], []
    for i in range(eps.shape[0]):
        right = phi[i, Y] > eps[i, X]
        left = ~right & (phi[i, X] > 0)
        tgt = np.full(n * n, -1, dtype=np.int64)
        tgt[right] = X[right] * n + fidx[i, Y[right]]
        tgt[left] = fidx[i, X[left]] * n + Y[left]
        ok = tgt >= 0
        rows.append(src[ok])
        cols.append(tgt[ok])
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n * n, n * n))
    ncomp, _ = connected_components(graph, directed=True, connection="weak")
    return ncomp == 1


def check_perfect(s: int, square_budget: int = DEFAULT_SQUARE_BUDGET,
                  kr: Optional[KRCrystal] = None) -> PerfectnessReport:
    kr = kr or KRCrystal(s)
    elements = kr.elements()
    eps, phi, fidx = _tables(kr, elements)
    report = PerfectnessReport(s=s)
    targets = set(enumerate_level_weights(s))
    report.level_weights = len(targets)

    levels = [level(tuple(int(v) for v in eps[:, k])) for k in range(len(elements))]
    report.min_level = min(levels)
    if report.min_level < s:
        report.reasons.append(f"some element has level(eps) = {report.min_level} < {s}")
    mins = [k for k, lv in enumerate(levels) if lv == s]
    report.min_elements = [elements[k] for k in mins]
    eps_img = [tuple(int(v) for v in eps[:, k]) for k in mins]
    phi_img = [tuple(int(v) for v in phi[:, k]) for k in mins]
    report.eps_image = set(eps_img)
    report.phi_image = set(phi_img)
    for name, img in (("eps", eps_img), ("phi", phi_img)):
        if len(set(img)) != len(img):
            report.reasons.append(f"{name} is not injective on B_min")
        if set(img) != targets:
            report.reasons.append(f"{name}(B_min) differs from the level-{s} dominant weights")

    pairs = len(elements) ** 2
    if pairs > square_budget:
        report.square_notice = f"{pairs} pairs exceed the budget of {square_budget}"
    else:
        report.connected_square = tensor_square_connected(eps, phi, fidx)
        if not report.connected_square:
            report.reasons.append("tensor square is disconnected")
    return report
