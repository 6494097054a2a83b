"""
Bordered double circulant codes.
"""

from typing import Any, Dict, Optional, Union

import numpy as np

from codes.linear_code import LinearCode
from constructions.base_construction import BaseConstruction, RowLike, coerce_row
from constructions.circulant import circulant_ints
from fields.galois_fields import FieldTag


class BorderedDoubleCirculantConstruction(BaseConstruction):
    """(I_n | B) where B has border row (0, 1, ..., 1), border column of ones and circulant A."""

    family = "bordered_dcc"

    def border(self, row: np.ndarray) -> np.ndarray:
        size = row.size + 1
        block = np.ones((size, size), dtype=np.int64)
        block[0, 0] = 0
        block[1:, 1:] = circulant_ints(self.tag, 1, row)
        return block

    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        self.require(params, "rA")
        row = coerce_row(self.tag, params["rA"], label="rA")
        return self.systematic(self.border(row), name=name)


def bordered_dcc(tag: Union[str, FieldTag], rA: RowLike, name: Optional[str] = None) -> LinearCode:
    """[2n, n] bordered double circulant code from the length n-1 first row of A."""
    return BorderedDoubleCirculantConstruction(tag).build({"rA": rA}, name=name)
