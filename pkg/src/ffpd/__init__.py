"""Exact positive-definite matrix theory over finite fields.

Subpackages: gf (field arithmetic and positivity), linalg (exact matrices and
decompositions), pressing (pseudograph pressing engine), paperbench (the
verification battery), cli and service (front ends).
"""

from .gf import Elem, Field, field_new, is_definite, is_positive, positive_sqrt
from .linalg import Mat
from .pressing import Pseudograph

__all__ = [
    "Elem",
    "Field",
    "Mat",
    "Pseudograph",
    "field_new",
    "is_definite",
    "is_positive",
    "positive_sqrt",
]

__version__ = "0.1.0"
