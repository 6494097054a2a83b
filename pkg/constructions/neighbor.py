"""
Neighbor construction: <C cap <x>^perp, x> for a self-dual C and a
self-orthogonal x = (0, ..., 0, x_hat) outside C.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

import numpy as np

from codes.linear_code import LinearCode, contains, is_self_dual
from constructions.base_construction import BaseConstruction
from fields.galois_fields import FieldMismatchError, field_for, to_int_array
from fields.vectors import FieldVector, InnerProductForm, default_form, inner_product


class NeighborError(ValueError):
    """Raised when the neighbor preconditions fail."""


@dataclass(frozen=True)
class NeighborSpec:
    base: LinearCode
    x_hat: FieldVector

    def __post_init__(self):
        if self.x_hat.tag is not self.base.tag:
            raise FieldMismatchError(f"x_hat is over {self.x_hat.tag.value}, base over {self.base.tag.value}")
        if 2 * len(self.x_hat) != self.base.n:
            raise NeighborError(f"x_hat has length {len(self.x_hat)}, expected {self.base.n // 2}")

    @property
    def x(self) -> FieldVector:
        return FieldVector(self.base.tag, (0,) * (self.base.n // 2) + self.x_hat.values)


def neighbor(spec: NeighborSpec, form: Union[str, InnerProductForm, None] = None, name: Optional[str] = None) -> LinearCode:
    """
    Args:
        spec: Base code and x_hat
        form: Inner product; defaults to Euclidean over F3 and Hermitian over F4

    Returns:
        The self-dual neighbor

    Raises:
        NeighborError: if the base is not self-dual, <x,x> != 0 or x is in the base
    """
    base = spec.base
    form = InnerProductForm.parse(form) if form is not None else default_form(base.tag)
    x = spec.x
    if not is_self_dual(base, form):
        raise NeighborError(f"Base {base.describe()} is not {form.value} self-dual")
    if inner_product(x, x, form).value != 0:
        raise NeighborError(f"<x,x> is nonzero for x_hat={spec.x_hat}")
    if contains(base, x):
        raise NeighborError(f"x_hat={spec.x_hat} already gives a codeword of the base")

    GF = field_for(base.tag)
    G = base.generator
    xv = x.to_array()
    # <g, x> is linear in g for both forms
    pairing = G @ (xv ** 2 if form is InnerProductForm.HERMITIAN else xv)
    values = to_int_array(pairing)
    pivot = int(np.flatnonzero(values)[0])
    kernel = [G[i] - (pairing[i] / pairing[pivot]) * G[pivot] for i in range(base.k) if i != pivot]
    rows = GF(np.vstack([to_int_array(row) for row in kernel] + [to_int_array(xv)]))
    result = LinearCode(base.tag, rows, name=name)
    if not is_self_dual(result, form):
        raise NeighborError(f"Neighbor of {base.describe()} is not self-dual")
    return result


class NeighborConstruction(BaseConstruction):
    family = "neighbor"

    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        self.require(params, "base", "x")
        x_hat = params["x"]
        if not isinstance(x_hat, FieldVector):
            x_hat = FieldVector.parse(self.tag, x_hat)
        code = neighbor(NeighborSpec(params["base"], x_hat), name=name)
        self.logger.debug(f"Neighbor {name or ''} of {params['base'].describe()}")
        return code
