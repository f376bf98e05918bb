"""Kirillov-Reshetikhin crystals B^{7,s} of affine type E7^(1).

The classical crystal B(s w7) is modelled by multichains in the minuscule
letter poset; the affine operators e_0/f_0 are synthesized through the
multiplicity-free A6 / A7 Levi branching.
"""

from .cartan import (
    I, I0, I2, I02, I07, cartan_entry, classical_level, enumerate_level_weights, level,
)
from .crystal_core import CrystalGraph, LetterCrystal, letters_E7
from .rows import CompParams, RowCrystal
from .kr import KRCrystal, build_kr

__version__ = "0.1.0"

__all__ = [
    "I", "I0", "I2", "I02", "I07",
    "cartan_entry", "classical_level", "enumerate_level_weights", "level",
    "CrystalGraph", "LetterCrystal", "letters_E7",
    "CompParams", "RowCrystal",
    "KRCrystal", "build_kr",
]
