"""
Finite field module for GF(3) and GF(4) arithmetic.

Field elements are stored as small integers using the galois integer
encoding. GF(3) uses 0, 1, 2. GF(4) uses 0, 1, 2 (= w) and 3 (= w^2 = w + 1),
which is also the two-bit (hi, lo) layout used by the bitplane kernels.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Union

import galois
import numpy as np

logger = logging.getLogger(__name__)


class FieldMismatchError(ValueError):
    """Raised when operands disagree on field tag, length or inner product form."""


class FieldTag(str, Enum):
    """The two fields supported by the library."""

    F3 = "F3"
    F4 = "F4"

    @property
    def order(self) -> int:
        return 3 if self is FieldTag.F3 else 4

    @classmethod
    def parse(cls, value: Union[str, "FieldTag"]) -> "FieldTag":
        if isinstance(value, FieldTag):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise FieldMismatchError(f"Unknown field tag: {value!r} (expected F3 or F4)")


# Catalog / CLI token sets
_TOKENS: Dict[FieldTag, List[str]] = {
    FieldTag.F3: ["0", "1", "2"],
    FieldTag.F4: ["0", "1", "w", "w2"],
}


@lru_cache(maxsize=None)
def field_for(tag: Union[str, FieldTag]) -> type:
    """Return the galois FieldArray class for a tag."""
    return galois.GF(FieldTag.parse(tag).order)


@lru_cache(maxsize=None)
def _tables(tag: FieldTag) -> Dict[str, np.ndarray]:
    GF = field_for(tag)
    q = tag.order
    elements = GF(np.arange(q))
    add = (elements[:, None] + elements[None, :]).view(np.ndarray).astype(np.int64)
    mul = (elements[:, None] * elements[None, :]).view(np.ndarray).astype(np.int64)
    neg = (-elements).view(np.ndarray).astype(np.int64)
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = (GF(1) / elements[1:]).view(np.ndarray)
    return {"add": add, "mul": mul, "neg": neg, "inv": inv}


def add_table(tag: FieldTag) -> np.ndarray:
    return _tables(FieldTag.parse(tag))["add"]


def mul_table(tag: FieldTag) -> np.ndarray:
    return _tables(FieldTag.parse(tag))["mul"]


def neg_table(tag: FieldTag) -> np.ndarray:
    return _tables(FieldTag.parse(tag))["neg"]


def inv_table(tag: FieldTag) -> np.ndarray:
    """Inverses of the nonzero elements; entry 0 is unused."""
    return _tables(FieldTag.parse(tag))["inv"]


def nonzero_elements(tag: FieldTag) -> List[int]:
    return list(range(1, FieldTag.parse(tag).order))


def to_int_array(values) -> np.ndarray:
    """Strip a galois FieldArray (or anything array-like) down to plain int64."""
    if isinstance(values, galois.FieldArray):
        values = values.view(np.ndarray)
    return np.asarray(values, dtype=np.int64)


def negate_array(tag: FieldTag, values) -> np.ndarray:
    return neg_table(tag)[to_int_array(values)]


def scale_array(tag: FieldTag, scalar: int, values) -> np.ndarray:
    return mul_table(tag)[int(scalar)][to_int_array(values)]


def parse_symbol(tag: Union[str, FieldTag], token: str) -> int:
    """Parse one catalog token (0,1,2 for F3; 0,1,w,w2 for F4)."""
    tag = FieldTag.parse(tag)
    try:
        return _TOKENS[tag].index(token.strip())
    except ValueError:
        raise FieldMismatchError(f"Invalid {tag.value} symbol: {token!r}")


def format_symbol(tag: Union[str, FieldTag], value: int) -> str:
    return _TOKENS[FieldTag.parse(tag)][int(value)]


def parse_row(tag: Union[str, FieldTag], text: str) -> List[int]:
    """Parse a comma separated row such as ``1,w,0,w2``."""
    if not text:
        return []
    return [parse_symbol(tag, token) for token in text.split(",")]


def format_row(tag: Union[str, FieldTag], values: Sequence[int]) -> str:
    return ",".join(format_symbol(tag, v) for v in values)


@dataclass(frozen=True)
class FieldElement:
    """A single scalar of GF(3) or GF(4)."""

    tag: FieldTag
    value: int

    def __post_init__(self):
        tag = FieldTag.parse(self.tag)
        object.__setattr__(self, "tag", tag)
        value = int(self.value)
        if not 0 <= value < tag.order:
            raise FieldMismatchError(f"Value {self.value} is not an element of {tag.value}")
        object.__setattr__(self, "value", value)

    @classmethod
    def parse(cls, tag: Union[str, FieldTag], token: str) -> "FieldElement":
        return cls(FieldTag.parse(tag), parse_symbol(tag, token))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return field_arith(self, other, "add")

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return field_arith(self, other, "mul")

    def __neg__(self) -> "FieldElement":
        return field_arith(self, None, "neg")

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return format_symbol(self.tag, self.value)


def field_arith(a: FieldElement, b: Optional[FieldElement], op: str) -> FieldElement:
    """
    Exact scalar arithmetic.

    Args:
        a: Left operand
        b: Right operand (ignored for the unary ops ``neg`` and ``inv``)
        op: One of ``add``, ``mul``, ``neg``, ``inv``

    Returns:
        The field result carrying the operands' tag
    """
    if op in ("add", "mul"):
        if b is None:
            raise ValueError(f"Operation {op} needs two operands")
        if a.tag is not b.tag:
            raise FieldMismatchError(f"Cannot {op} {a.tag.value} and {b.tag.value} elements")
        return FieldElement(a.tag, int(_tables(a.tag)[op][a.value, b.value]))
    if op == "neg":
        return FieldElement(a.tag, int(_tables(a.tag)["neg"][a.value]))
    if op == "inv":
        if a.value == 0:
            raise ZeroDivisionError(f"Zero has no inverse in {a.tag.value}")
        return FieldElement(a.tag, int(_tables(a.tag)["inv"][a.value]))
    raise ValueError(f"Unknown field operation: {op}")


def conjugate(a: FieldElement) -> FieldElement:
    """Frobenius conjugation a -> a^2 on GF(4); swaps w and w2."""
    if a.tag is not FieldTag.F4:
        raise FieldMismatchError("Conjugation is only defined for F4 elements")
    GF = field_for(a.tag)
    return FieldElement(a.tag, int(GF(a.value) ** 2))
