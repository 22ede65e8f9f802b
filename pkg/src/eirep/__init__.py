"""Finite EI categories: groups and bisets, category algebras, ordinary quivers, representation type."""

from .category import FiniteCategory, EIQuiver, Arrow, free_ei_cover, opposite, full_subcategory, subcategory
from .decider import decide, decide_symmetrized
from .errors import (ConsistencyError, EirepError, FieldNotSplittingError, InputError, PreconditionError,
                     ResourceError, StructuralError)
from .fields import GF
from .groups import Biset, FiniteGroup, Perm, Subgroup
from .quiver import dynkin_classify, ordinary_quiver
from .verdict import FINITE, INFINITE, UNKNOWN, Verdict

__all__ = [
    "FiniteCategory", "EIQuiver", "Arrow", "free_ei_cover", "opposite", "full_subcategory", "subcategory",
    "decide", "decide_symmetrized",
    "ConsistencyError", "EirepError", "FieldNotSplittingError", "InputError", "PreconditionError",
    "ResourceError", "StructuralError",
    "GF", "Biset", "FiniteGroup", "Perm", "Subgroup", "dynkin_classify", "ordinary_quiver",
    "FINITE", "INFINITE", "UNKNOWN", "Verdict",
]

__version__ = "0.1.0"
