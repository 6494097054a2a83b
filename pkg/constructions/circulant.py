"""
mu-circulant matrices.

Row i+1 is row i shifted right once, with the entry that wraps around
multiplied by mu. mu = 1 gives a circulant and mu = -1 a negacirculant.
"""

from dataclasses import dataclass
from typing import Union

import galois
import numpy as np

from fields.galois_fields import FieldElement, FieldMismatchError, FieldTag, field_for, mul_table, neg_table
from fields.vectors import FieldVector


@dataclass(frozen=True)
class CirculantSpec:
    tag: FieldTag
    mu: FieldElement
    first_row: FieldVector

    def __post_init__(self):
        tag = FieldTag.parse(self.tag)
        object.__setattr__(self, "tag", tag)
        if self.mu.tag is not tag or self.first_row.tag is not tag:
            raise FieldMismatchError("mu and the first row must share the circulant's field")
        if self.mu.value == 0:
            raise ValueError("mu must be nonzero")


def minus_one(tag: Union[str, FieldTag]) -> int:
    return int(neg_table(FieldTag.parse(tag))[1])


def circulant_ints(tag: FieldTag, mu: int, row: np.ndarray) -> np.ndarray:
    """Entry (i, j) is mu^[j < i] * r_{(j - i) mod n}, as plain ints."""
    if int(mu) == 0:
        raise ValueError("mu must be nonzero")
    row = np.asarray(row, dtype=np.int64)
    n = row.size
    index = np.arange(n)
    matrix = row[(index[None, :] - index[:, None]) % n]
    wrapped = index[None, :] < index[:, None]
    return np.where(wrapped, mul_table(tag)[int(mu)][matrix], matrix)


def negacirculant_ints(tag: FieldTag, row: np.ndarray) -> np.ndarray:
    return circulant_ints(tag, minus_one(tag), row)


def circulant_matrix(spec: CirculantSpec) -> galois.FieldArray:
    return field_for(spec.tag)(circulant_ints(spec.tag, spec.mu.value, np.array(spec.first_row.values)))
