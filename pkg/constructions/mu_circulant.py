"""
mu-circulant (quasi-twisted) codes (I_n | A).
"""

from typing import Any, Dict, Optional, Union

from codes.linear_code import LinearCode
from constructions.base_construction import BaseConstruction, RowLike, coerce_row
from constructions.circulant import circulant_ints
from fields.galois_fields import FieldElement, FieldTag, parse_symbol


class MuCirculantConstruction(BaseConstruction):
    family = "mu_circ"

    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        self.require(params, "rA", "mu")
        mu = params["mu"]
        if isinstance(mu, FieldElement):
            mu = mu.value
        elif isinstance(mu, str):
            mu = parse_symbol(self.tag, mu)
        row = coerce_row(self.tag, params["rA"], label="rA")
        return self.systematic(circulant_ints(self.tag, int(mu), row), name=name)


def mu_circulant_code(tag: Union[str, FieldTag], mu, rA: RowLike, name: Optional[str] = None) -> LinearCode:
    """
    Args:
        tag: F3 or F4
        mu: Nonzero twist as FieldElement, token or int value
        rA: First row of A

    Returns:
        The [2n, n] code
    """
    return MuCirculantConstruction(tag).build({"mu": mu, "rA": rA}, name=name)
