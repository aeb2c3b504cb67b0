"""Finite presentations, Fox calculus, first homology and covers."""
from .abelian import H1, Character, enumerate_characters, h1_smith, smith_normal_form
from .cosets import CosetTable, CosetTableError, SchreierPresentation, reidemeister_schreier
from .presentation import (
    CohomClass,
    CohomologyError,
    Presentation,
    PresentationError,
    eval_class,
    format_word,
    parse_word,
)
from .words import Word, fox_derivative, free_reduce, inverse, ring_add, ring_mul

__all__ = [
    "Character",
    "CohomClass",
    "CohomologyError",
    "CosetTable",
    "CosetTableError",
    "H1",
    "Presentation",
    "PresentationError",
    "SchreierPresentation",
    "Word",
    "enumerate_characters",
    "eval_class",
    "format_word",
    "fox_derivative",
    "free_reduce",
    "h1_smith",
    "inverse",
    "parse_word",
    "reidemeister_schreier",
    "ring_add",
    "ring_mul",
    "smith_normal_form",
]
