"""
Four-circulant and four-negacirculant codes: (I_2n | [[A, B], [-B^T, A^T]]).
"""

from typing import Any, Dict, Optional, Union

import numpy as np

from codes.linear_code import LinearCode
from constructions.base_construction import BaseConstruction, RowLike, coerce_row
from constructions.circulant import circulant_ints, minus_one
from fields.galois_fields import FieldTag, negate_array


def four_block_matrix(tag: FieldTag, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.block([[a, b], [negate_array(tag, b.T), a.T]])


def four_block_code(tag: Union[str, FieldTag], rA: RowLike, rB: RowLike, mu: int = -1, name: Optional[str] = None) -> LinearCode:
    """
    Args:
        tag: F3 or F4
        rA: First row of A
        rB: First row of B, same length as rA
        mu: +1 for circulant blocks, -1 for negacirculant blocks

    Returns:
        The [4n, 2n] code
    """
    tag = FieldTag.parse(tag)
    if mu not in (1, -1):
        raise ValueError(f"mu must be +1 or -1, got {mu}")
    row_a = coerce_row(tag, rA, label="rA")
    row_b = coerce_row(tag, rB, length=row_a.size, label="rB")
    field_mu = 1 if mu == 1 else minus_one(tag)
    construction = FourNegacirculantConstruction(tag) if mu == -1 else FourCirculantConstruction(tag)
    return construction.systematic(
        four_block_matrix(tag, circulant_ints(tag, field_mu, row_a), circulant_ints(tag, field_mu, row_b)),
        name=name,
    )


class FourCirculantConstruction(BaseConstruction):
    family = "four_circ"
    sign = 1

    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        self.require(params, "rA", "rB")
        return four_block_code(self.tag, params["rA"], params["rB"], mu=self.sign, name=name)


class FourNegacirculantConstruction(FourCirculantConstruction):
    family = "four_negacirc"
    sign = -1
