"""Steinberg multiplicities in irreducible SL2(F_q)-modules.

Computes d_{k,q} = dim Hom(st, L_k) from Brauer characters, from the closed
formulas for q in {2, 3, 4, 5, 7, 11}, and by brute-force linear algebra
over F_q.
"""

from .digits import PrimePower, DigitProfile, build_profile, dim_Lk, expand_base
from .brauer import DimResult, dkq_general, regular_classes
from .closed_forms import dkq_closed
from .errors import InconsistencyError, UnsupportedModulus

__all__ = [
    "PrimePower",
    "DigitProfile",
    "build_profile",
    "dim_Lk",
    "expand_base",
    "DimResult",
    "dkq_general",
    "regular_classes",
    "dkq_closed",
    "InconsistencyError",
    "UnsupportedModulus",
]

__version__ = "0.1.0"
