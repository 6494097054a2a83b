"""
Sparse single variable polynomials with exact integer coefficients.
"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union


class BigPoly:
    """Polynomial in y stored as {exponent: coefficient}; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        self._terms: Dict[int, int] = {}
        if terms:
            for exponent, coefficient in terms.items():
                if exponent < 0:
                    raise ValueError(f"Negative exponent {exponent}")
                if coefficient:
                    self._terms[int(exponent)] = int(coefficient)

    @classmethod
    def constant(cls, value: int) -> "BigPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "BigPoly":
        return cls({exponent: coefficient})

    @classmethod
    def from_dense(cls, coefficients: Iterable[int], stride: int = 1) -> "BigPoly":
        """Coefficient list in a variable z = y^stride."""
        return cls({i * stride: c for i, c in enumerate(coefficients)})

    def to_dense(self, length: Optional[int] = None) -> List[int]:
        size = length if length is not None else self.degree() + 1
        out = [0] * max(size, 0)
        for exponent, coefficient in self._terms.items():
            if exponent < size:
                out[exponent] = coefficient
        return out

    def __getitem__(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Highest exponent, -1 for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    def lowest_degree(self) -> int:
        return min(self._terms) if self._terms else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BigPoly.constant(other)
        if not isinstance(other, BigPoly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: Union["BigPoly", int]) -> "BigPoly":
        if isinstance(other, int):
            other = BigPoly.constant(other)
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return BigPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "BigPoly":
        return BigPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["BigPoly", int]) -> "BigPoly":
        if isinstance(other, int):
            other = BigPoly.constant(other)
        return self + (-other)

    def __mul__(self, other: Union["BigPoly", int]) -> "BigPoly":
        if isinstance(other, int):
            return BigPoly({e: c * other for e, c in self._terms.items()})
        terms: Dict[int, int] = {}
        other_items = list(other._terms.items())
        for a_exp, a_coef in self._terms.items():
            for b_exp, b_coef in other_items:
                key = a_exp + b_exp
                terms[key] = terms.get(key, 0) + a_coef * b_coef
        return BigPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "BigPoly":
        if power < 0:
            raise ValueError("Negative powers are not polynomials")
        result = BigPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def evaluate(self, y: int) -> int:
        return sum(c * y ** e for e, c in self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "BigPoly(0)"
        return "BigPoly(" + " + ".join(f"{c}*y^{e}" for e, c in self.items()) + ")"
