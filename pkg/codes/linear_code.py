"""
Linear code module: canonical generator matrices, duals, self-duality and
membership over GF(3) and GF(4).
"""

import logging
from functools import cached_property
from typing import List, Optional, Sequence, Union

import galois
import numpy as np

from fields.galois_fields import FieldMismatchError, FieldTag, field_for, format_row, to_int_array
from fields.vectors import FieldVector, InnerProductForm, check_form, default_form

logger = logging.getLogger(__name__)


def rref(tag: Union[str, FieldTag], matrix, ncols: Optional[int] = None) -> galois.FieldArray:
    """
    Canonical reduced row echelon form with zero rows dropped.

    Args:
        tag: Field of the entries
        matrix: k x n matrix (nested lists, int array or FieldArray)
        ncols: Column count, needed only when ``matrix`` has no rows

    Returns:
        FieldArray whose rows are a basis of the row space
    """
    GF = field_for(tag)
    ints = to_int_array(matrix)
    if ints.ndim == 1:
        ints = ints.reshape(1, -1) if ints.size else ints.reshape(0, ncols or 0)
    if ints.shape[0] == 0 or ints.shape[1] == 0:
        return GF(np.zeros((0, ints.shape[1]), dtype=np.int64))
    reduced = GF(ints).row_reduce()
    keep = np.any(reduced.view(np.ndarray) != 0, axis=1)
    return reduced[keep]


class LinearCode:
    """A linear [n, k] code stored by its canonical RREF generator."""

    def __init__(self, tag: Union[str, FieldTag], generator, n: Optional[int] = None, name: Optional[str] = None):
        """
        Args:
            tag: F3 or F4
            generator: Any spanning set of rows
            n: Length, required only for a generator with no rows
            name: Optional label used in logs and reports
        """
        self.tag = FieldTag.parse(tag)
        self.field = field_for(self.tag)
        ints = to_int_array(generator)
        if ints.ndim != 2:
            if ints.size == 0 and n is not None:
                ints = ints.reshape(0, n)
            else:
                raise ValueError(f"Generator must be a matrix, got shape {ints.shape}")
        if n is not None and ints.shape[1] != n:
            raise FieldMismatchError(f"Generator has {ints.shape[1]} columns, expected length {n}")
        self.generator = rref(self.tag, ints)
        self.n = int(ints.shape[1])
        self.k = int(self.generator.shape[0])
        self.name = name

    @classmethod
    def zero(cls, tag: Union[str, FieldTag], n: int) -> "LinearCode":
        return cls(tag, np.zeros((0, n), dtype=np.int64))

    @cached_property
    def generator_ints(self) -> np.ndarray:
        return to_int_array(self.generator).copy()

    @cached_property
    def pivots(self) -> List[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.generator_ints]

    def rows(self) -> List[FieldVector]:
        return [FieldVector(self.tag, tuple(row)) for row in self.generator_ints]

    def describe(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"{label}[{self.n},{self.k}] over {self.tag.value}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.tag is other.tag
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.generator_ints, other.generator_ints)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinearCode({self.describe()})"

    def format_generator(self) -> List[str]:
        return [format_row(self.tag, row) for row in self.generator_ints]


def admissible_length(tag: Union[str, FieldTag], n: int) -> bool:
    """Self-dual codes exist only for 4 | n over F3 and 2 | n over F4."""
    return n > 0 and n % (4 if FieldTag.parse(tag) is FieldTag.F3 else 2) == 0


def _form_matrix(code: LinearCode, form: InnerProductForm) -> galois.FieldArray:
    G = code.generator
    return G ** 2 if form is InnerProductForm.HERMITIAN else G


def dual(code: LinearCode, form: Union[str, InnerProductForm, None] = None) -> LinearCode:
    """Dual code under the Euclidean (F3) or Hermitian (F4) form."""
    form = InnerProductForm.parse(form) if form is not None else default_form(code.tag)
    check_form(code.tag, form)
    GF = code.field
    if code.k == 0:
        return LinearCode(code.tag, GF.Identity(code.n), n=code.n)
    if code.k == code.n:
        return LinearCode.zero(code.tag, code.n)
    # x is H-orthogonal to g iff g^2 . x = 0, because squaring is a field automorphism
    basis = _form_matrix(code, form).null_space()
    return LinearCode(code.tag, basis, n=code.n)


def gram_matrix(code: LinearCode, form: Union[str, InnerProductForm, None] = None) -> galois.FieldArray:
    form = InnerProductForm.parse(form) if form is not None else default_form(code.tag)
    check_form(code.tag, form)
    G = code.generator
    return G @ _form_matrix(code, form).T


def is_self_dual(code: LinearCode, form: Union[str, InnerProductForm, None] = None) -> bool:
    form = InnerProductForm.parse(form) if form is not None else default_form(code.tag)
    check_form(code.tag, form)
    if not admissible_length(code.tag, code.n) or 2 * code.k != code.n:
        return False
    return not np.any(gram_matrix(code, form).view(np.ndarray))


def contains(code: LinearCode, x: Union[FieldVector, Sequence[int]]) -> bool:
    """Membership by reduction against the RREF generator."""
    if isinstance(x, FieldVector):
        if x.tag is not code.tag:
            raise FieldMismatchError(f"{x.tag.value} vector tested against a {code.tag.value} code")
        values = x.values
    else:
        values = x
    v = code.field(to_int_array(values).copy())
    if v.shape != (code.n,):
        raise FieldMismatchError(f"Vector of length {v.size} tested against a code of length {code.n}")
    for row, pivot in zip(code.generator, code.pivots):
        if v[pivot] != 0:
            v = v - v[pivot] * row
    return not np.any(v.view(np.ndarray))
