"""
__init__.py file to make the fields directory a proper package.
"""

from fields.galois_fields import (
    FieldElement,
    FieldMismatchError,
    FieldTag,
    conjugate,
    field_arith,
    field_for,
)
from fields.vectors import FieldVector, InnerProductForm, default_form, inner_product, weight_support

__all__ = [
    "FieldElement",
    "FieldMismatchError",
    "FieldTag",
    "FieldVector",
    "InnerProductForm",
    "conjugate",
    "default_form",
    "field_arith",
    "field_for",
    "inner_product",
    "weight_support",
]
