"""
Length 72 ternary codes from a 4 x 4 array of negacirculant blocks.
"""

from typing import Any, Dict, Optional

import numpy as np

from codes.linear_code import LinearCode
from constructions.base_construction import BaseConstruction, RowLike, coerce_row
from constructions.circulant import negacirculant_ints
from fields.galois_fields import FieldTag, negate_array

BLOCK_SIZE = 9


class ItoArrayConstruction(BaseConstruction):
    family = "ito"

    def __init__(self, tag=FieldTag.F3, config=None):
        super().__init__(tag, config)
        if self.tag is not FieldTag.F3:
            raise ValueError("The array construction is ternary only")

    def array(self, a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> np.ndarray:
        def neg(x):
            return negate_array(self.tag, x)

        return np.block(
            [
                [a, b, c, d],
                [b, neg(a), d, neg(c)],
                [c.T, neg(d.T), neg(a.T), b.T],
                [d.T, c.T, neg(b.T), neg(a.T)],
            ]
        )

    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        self.require(params, "rA", "rB", "rC", "rD")
        blocks = [
            negacirculant_ints(self.tag, coerce_row(self.tag, params[key], length=BLOCK_SIZE, label=key))
            for key in ("rA", "rB", "rC", "rD")
        ]
        return self.systematic(self.array(*blocks), name=name)


def ito_array_code(rA: RowLike, rB: RowLike, rC: RowLike, rD: RowLike, name: Optional[str] = None) -> LinearCode:
    """[72, 36] ternary code (I_36 | array of negacirculants)."""
    return ItoArrayConstruction().build({"rA": rA, "rB": rB, "rC": rC, "rD": rD}, name=name)
