"""
Direct sums of codes.
"""

from typing import Any, Dict, Optional

import numpy as np

from codes.linear_code import LinearCode
from constructions.base_construction import BaseConstruction
from fields.galois_fields import FieldMismatchError


def direct_sum(a: LinearCode, b: LinearCode, name: Optional[str] = None) -> LinearCode:
    """Block-diagonal generator; the enumerator is the product of the parts'."""
    if a.tag is not b.tag:
        raise FieldMismatchError(f"Direct sum of {a.tag.value} and {b.tag.value} codes")
    generator = np.zeros((a.k + b.k, a.n + b.n), dtype=np.int64)
    generator[: a.k, : a.n] = a.generator_ints
    generator[a.k :, a.n :] = b.generator_ints
    return LinearCode(a.tag, generator, n=a.n + b.n, name=name)


class DirectSumConstruction(BaseConstruction):
    family = "direct_sum"

    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        self.require(params, "parts")
        parts = list(params["parts"])
        if not parts:
            raise ValueError("direct_sum needs at least one part")
        result = LinearCode(parts[0].tag, parts[0].generator_ints, n=parts[0].n)
        for part in parts[1:]:
            result = direct_sum(result, part)
        result.name = name
        self.logger.debug(f"Direct sum of {len(parts)} parts: {result.describe()}")
        return result
