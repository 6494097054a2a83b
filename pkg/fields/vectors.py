"""
Vector module: field vectors, the Euclidean and Hermitian inner products and
weight/support.

Support indices are 1-based everywhere user facing.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Tuple, Union

import numpy as np

from fields.galois_fields import (
    FieldElement,
    FieldMismatchError,
    FieldTag,
    field_for,
    format_row,
    parse_row,
    to_int_array,
)


class InnerProductForm(str, Enum):
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"

    @classmethod
    def parse(cls, value: Union[str, "InnerProductForm"]) -> "InnerProductForm":
        if isinstance(value, InnerProductForm):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise FieldMismatchError(f"Unknown inner product form: {value!r}")


def default_form(tag: Union[str, FieldTag]) -> InnerProductForm:
    """Euclidean for F3, Hermitian for F4."""
    return InnerProductForm.EUCLIDEAN if FieldTag.parse(tag) is FieldTag.F3 else InnerProductForm.HERMITIAN


def check_form(tag: FieldTag, form: InnerProductForm) -> None:
    if form is not default_form(tag):
        raise FieldMismatchError(f"The {form.value} form is not used with {tag.value} codes")


@dataclass(frozen=True)
class FieldVector:
    """An immutable vector of length n >= 1 over one field."""

    tag: FieldTag
    values: Tuple[int, ...]

    def __post_init__(self):
        tag = FieldTag.parse(self.tag)
        object.__setattr__(self, "tag", tag)
        values = tuple(int(v) for v in to_int_array(self.values).ravel())
        if not values:
            raise ValueError("A field vector needs at least one coordinate")
        if any(v < 0 or v >= tag.order for v in values):
            raise FieldMismatchError(f"Entries {values} are not all {tag.value} elements")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, tag: Union[str, FieldTag], text: str) -> "FieldVector":
        return cls(FieldTag.parse(tag), tuple(parse_row(tag, text)))

    @classmethod
    def from_elements(cls, elements: Iterable[FieldElement]) -> "FieldVector":
        elements = list(elements)
        if not elements:
            raise ValueError("A field vector needs at least one coordinate")
        tags = {e.tag for e in elements}
        if len(tags) != 1:
            raise FieldMismatchError("Vector entries carry mixed field tags")
        return cls(elements[0].tag, tuple(e.value for e in elements))

    @classmethod
    def zeros(cls, tag: Union[str, FieldTag], n: int) -> "FieldVector":
        return cls(FieldTag.parse(tag), (0,) * n)

    @property
    def entries(self) -> List[FieldElement]:
        return [FieldElement(self.tag, v) for v in self.values]

    def to_array(self):
        """The vector as a galois FieldArray."""
        return field_for(self.tag)(list(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> FieldElement:
        return FieldElement(self.tag, self.values[index])

    def __str__(self) -> str:
        return f"({format_row(self.tag, self.values)})"


def inner_product(x: FieldVector, y: FieldVector, form: Union[str, InnerProductForm]) -> FieldElement:
    """
    <x,y>_E = sum x_i y_i over F3, <x,y>_H = sum x_i y_i^2 over F4.

    Raises:
        FieldMismatchError: on tag, length or form mismatch
    """
    form = InnerProductForm.parse(form)
    if x.tag is not y.tag:
        raise FieldMismatchError(f"Inner product of {x.tag.value} and {y.tag.value} vectors")
    if len(x) != len(y):
        raise FieldMismatchError(f"Inner product of vectors of length {len(x)} and {len(y)}")
    check_form(x.tag, form)

    a, b = x.to_array(), y.to_array()
    if form is InnerProductForm.HERMITIAN:
        b = b ** 2
    return FieldElement(x.tag, int(np.sum(a * b)))


def weight_support(x: FieldVector) -> Tuple[int, FrozenSet[int]]:
    support = frozenset(i + 1 for i, v in enumerate(x.values) if v)
    return len(support), support
