"""Garside structures for the monoids M_n attached to (n, n+1)-torus knot groups."""

from .errors import (
    CapExceeded,
    Diverged,
    GarsideKitError,
    Inconclusive,
    NotGarsideElement,
)
from .families import FamilySpec, make_family, mn, structure_for
from .garside import build_structure, group_equal, group_normalize, normal_form
from .kernel import Presentation, make_presentation, parse_word, format_word

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Diverged",
    "FamilySpec",
    "GarsideKitError",
    "Inconclusive",
    "NotGarsideElement",
    "Presentation",
    "build_structure",
    "format_word",
    "group_equal",
    "group_normalize",
    "make_family",
    "make_presentation",
    "mn",
    "normal_form",
    "parse_word",
    "structure_for",
]
