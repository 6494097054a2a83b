"""
Gleason-type expansions and the parametric near-extremal weight enumerators.

Every ternary self-dual enumerator of length n is
    sum_j a_j (1+8y^3)^(n/4-3j) (y^3 (1-y^3)^3)^j
and every quaternary Hermitian self-dual enumerator of length n is
    sum_j a_j (1+3y^2)^(n/2-3j) (y^2 (1-y^2)^2)^j.

With z = y^3 (resp. y^2) and length 12m (resp. 6m) this reads
    W = sum_j a_j F^(m-j) g^j,  F = (1+cz)^3,  g = z (1-z)^e
with (c, e) = (8, 3) or (3, 2). Requiring A_0 = 1 and A = 0 below the
near-extremal weight fixes a_0..a_(m-1); a_m carries alpha. The system is
unitriangular in z, so it is solved exactly by peeling: read a_j off the
constant term, subtract a_j F^(m-j), then divide the truncated series by g.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Tuple, Union

from codes.weight_enumerator import WeightEnumerator
from fields.galois_fields import FieldTag
from gleason.bigpoly import BigPoly
from gleason.constants import NEAR_EXTREMAL_MAX_M, LENGTH_UNIT, WEIGHT_STEP

logger = logging.getLogger(__name__)

# (c, e) with F = (1 + c z)^3 and g = z (1 - z)^e
_SHAPE: Dict[FieldTag, Tuple[int, int]] = {FieldTag.F3: (8, 3), FieldTag.F4: (3, 2)}


class GleasonRangeError(ValueError):
    """Raised for lengths or indices outside the Gleason-type expansion's range."""


def basis_factors(tag: Union[str, FieldTag]) -> Tuple[BigPoly, BigPoly]:
    """(1 + c z, g) in z; basis j of length n is (1 + c z)^(n/4 - 3j) g^j (n/2 - 3j over F4)."""
    c, e = _SHAPE[FieldTag.parse(tag)]
    return BigPoly({0: 1, 1: c}), BigPoly.monomial(1) * BigPoly({0: 1, 1: -1}) ** e


def gleason_basis(tag: Union[str, FieldTag], n: int, j: int) -> BigPoly:
    """
    One basis polynomial of the Gleason-type expansion, in y.

    Args:
        tag: F3 (Euclidean) or F4 (Hermitian)
        n: Code length, 4 | n for F3 and 2 | n for F4
        j: Index, 0 <= j <= n/12 (F3) or n/6 (F4)
    """
    tag = FieldTag.parse(tag)
    divisor = 4 if tag is FieldTag.F3 else 2
    if n <= 0 or n % divisor:
        raise GleasonRangeError(f"No {tag.value} self-dual code of length {n}")
    if not 0 <= j <= n // LENGTH_UNIT[tag]:
        raise GleasonRangeError(f"j={j} outside 0..{n // LENGTH_UNIT[tag]} for length {n}")
    linear, g = basis_factors(tag)
    in_z = linear ** (n // divisor - 3 * j) * g ** j
    return BigPoly.from_dense(in_z.to_dense(), stride=WEIGHT_STEP[tag])


def check_m(tag: FieldTag, m: int) -> None:
    limit = NEAR_EXTREMAL_MAX_M[tag]
    if not 1 <= m <= limit:
        raise GleasonRangeError(f"m={m} outside 1..{limit}: no {tag.value} near-extremal code of length {LENGTH_UNIT[tag] * m}")


def _factor_power(c: int, k: int, length: int) -> List[int]:
    """First ``length`` coefficients of (1 + c z)^(3k)."""
    return [comb(3 * k, i) * c ** i if i <= 3 * k else 0 for i in range(length)]


def divide_series(values: List[int], divisor: List[int]) -> List[int]:
    """
    Truncated power series quotient values / divisor over the integers.

    Raises:
        ArithmeticError: if some coefficient of the quotient is not an integer
    """
    quotient: List[int] = []
    for i, value in enumerate(values):
        acc = value - sum(divisor[k] * quotient[i - k] for k in range(1, min(i, len(divisor) - 1) + 1))
        q, r = divmod(acc, divisor[0])
        if r:
            raise ArithmeticError(f"Series quotient is not integral at degree {i}")
        quotient.append(q)
    return quotient


def solve_coefficients(tag: FieldTag, m: int, targets: List[int]) -> List[int]:
    """
    Coefficients a_0..a_m whose expansion has z-coefficients ``targets`` in
    degrees 0..m.

    Raises:
        ArithmeticError: if the basis is not unitriangular or a coefficient is not integral
    """
    linear, g = basis_factors(tag)
    if linear[0] != 1 or g.lowest_degree() != 1 or g[1] != 1:
        raise ArithmeticError(f"{tag.value} Gleason basis is not unitriangular in z")
    tail = [g[d] for d in range(1, g.degree() + 1)]  # g / z

    remainder = list(targets)
    if len(remainder) != m + 1:
        raise ValueError(f"Need {m + 1} target coefficients, got {len(remainder)}")
    coefficients = []
    for j in range(m + 1):
        power = _factor_power(linear[1], m - j, len(remainder))
        a_j, r = divmod(remainder[0], power[0])
        if r:
            raise ArithmeticError(f"Non-integral Gleason coefficient a_{j}")
        coefficients.append(a_j)
        remainder = [x - a_j * p for x, p in zip(remainder, power)]
        remainder = divide_series(remainder[1:], tail)
    return coefficients


def expand(tag: FieldTag, m: int, coefficients: List[int]) -> BigPoly:
    """sum_j a_j F^(m-j) g^j as a polynomial in z, by Horner in g."""
    linear, g = basis_factors(tag)
    f = linear ** 3
    powers = [BigPoly.constant(1)]
    for _ in range(m):
        powers.append(powers[-1] * f)
    result = BigPoly.constant(coefficients[m])
    for j in range(m - 1, -1, -1):
        result = result * g + powers[m - j] * coefficients[j]
    return result


@dataclass(frozen=True)
class ParametricEnumerator:
    """A_weight = s + t * alpha for every weight, alpha the minimum-weight count."""

    tag: FieldTag
    n: int
    m: int
    terms: Mapping[int, Tuple[int, int]]
    a_s: Tuple[int, ...] = field(default_factory=tuple)
    a_t: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        # shared through the cache, so callers get read-only views
        object.__setattr__(self, "terms", MappingProxyType(dict(self.terms)))
        object.__setattr__(self, "a_s", tuple(self.a_s))
        object.__setattr__(self, "a_t", tuple(self.a_t))

    @property
    def min_weight(self) -> int:
        return WEIGHT_STEP[self.tag] * self.m

    def s(self, weight: int) -> int:
        return self.terms.get(weight, (0, 0))[0]

    def t(self, weight: int) -> int:
        return self.terms.get(weight, (0, 0))[1]

    def coefficient(self, weight: int, alpha: int) -> int:
        s, t = self.terms.get(weight, (0, 0))
        return s + t * alpha

    def coefficients_at(self, alpha: int) -> Dict[int, int]:
        return {w: s + t * alpha for w, (s, t) in sorted(self.terms.items())}

    def at(self, alpha: int) -> WeightEnumerator:
        """The enumerator at a given alpha; ValueError if a coefficient is negative."""
        return WeightEnumerator(self.tag, self.n, self.coefficients_at(alpha))

    def mismatches(self, enumerator: WeightEnumerator) -> List[int]:
        """Weights where a measured enumerator departs from this family at its own alpha."""
        alpha = enumerator[self.min_weight]
        return [w for w in range(self.n + 1) if enumerator[w] != self.coefficient(w, alpha)]

    def alpha_of(self, enumerator: WeightEnumerator) -> int:
        """
        Infer alpha from a measured enumerator.

        Raises:
            ValueError: if the enumerator is not a member of this family
        """
        if enumerator.tag is not self.tag or enumerator.n != self.n:
            raise ValueError(f"Enumerator of length {enumerator.n} does not belong to the length-{self.n} family")
        bad = self.mismatches(enumerator)
        if bad:
            raise ValueError(f"Enumerator departs from the family at weights {bad}")
        return enumerator[self.min_weight]

    def totals(self) -> Tuple[int, int]:
        """(sum of s, sum of t); a valid family gives (q^(n/2), 0)."""
        return sum(s for s, _ in self.terms.values()), sum(t for _, t in self.terms.values())

    def nonzero_terms(self) -> List[Tuple[int, int, int]]:
        return [(w, s, t) for w, (s, t) in sorted(self.terms.items()) if s or t]

    def to_json(self) -> List[List[Any]]:
        return [[w, str(s), str(t)] for w, s, t in self.nonzero_terms()]



@lru_cache(maxsize=None)
def parametric_near_extremal(tag: Union[str, FieldTag], m: int) -> ParametricEnumerator:
    """
    Parametric enumerator of a near-extremal code of length 12m (F3) or 6m (F4).

    Raises:
        GleasonRangeError: if m is outside the range where such codes can exist
        ArithmeticError: if the solved family breaks the sum rule
    """
    tag = FieldTag.parse(tag)
    check_m(tag, m)
    step = WEIGHT_STEP[tag]
    n = LENGTH_UNIT[tag] * m

    a_s = solve_coefficients(tag, m, [1] + [0] * m)
    a_t = solve_coefficients(tag, m, [0] * m + [1])
    poly_s = expand(tag, m, a_s)
    poly_t = expand(tag, m, a_t)
    top = n // step
    terms = {step * i: (poly_s[i], poly_t[i]) for i in range(top + 1)}
    family = ParametricEnumerator(tag=tag, n=n, m=m, terms=terms, a_s=a_s, a_t=a_t)
    if family.totals() != (tag.order ** (n // 2), 0):
        raise ArithmeticError(f"{tag.value} length {n} family breaks the sum rule: {family.totals()}")
    logger.debug(f"Solved {tag.value} length {n}: {len(terms)} weights")
    return family
