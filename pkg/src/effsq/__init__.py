"""Effective squares, cubes and independence checks over finitely presented abelian groups."""

from .classes import MorphismClass, parse_class
from .groups import FpAbGroup, Hom, cyclic, free, make_group, make_hom, pushout
from .squares import Span, Square, is_effective
from .verdict import Verdict

__all__ = [
    "FpAbGroup",
    "Hom",
    "MorphismClass",
    "Span",
    "Square",
    "Verdict",
    "cyclic",
    "free",
    "is_effective",
    "make_group",
    "make_hom",
    "parse_class",
    "pushout",
]
