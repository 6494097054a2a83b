"""
Numeric limits, bounds and literature values for near-extremal codes.
"""

from dataclasses import dataclass
from typing import Dict, List, Union

from fields.galois_fields import FieldTag

# Near-extremal codes of length 12m (F3) / 6m (F4) do not exist beyond these m
NEAR_EXTREMAL_MAX_M: Dict[FieldTag, int] = {FieldTag.F3: 146, FieldTag.F4: 37}

# Extremal codes do not exist from these m on; reported, never enforced
EXTREMAL_NONEXISTENCE_M: Dict[FieldTag, int] = {FieldTag.F3: 70, FieldTag.F4: 17}

# alpha is divisible by these
ALPHA_MODULUS: Dict[FieldTag, int] = {FieldTag.F3: 8, FieldTag.F4: 9}

WEIGHT_STEP: Dict[FieldTag, int] = {FieldTag.F3: 3, FieldTag.F4: 2}
LENGTH_UNIT: Dict[FieldTag, int] = {FieldTag.F3: 12, FieldTag.F4: 6}

# Size of the orbit {c*x : c != 0} of a nonzero word
SCALAR_CLASS_SIZE: Dict[FieldTag, int] = {FieldTag.F3: 2, FieldTag.F4: 3}


def extremal_bound(tag: Union[str, FieldTag], n: int) -> int:
    """Upper bound on the minimum weight: 3*floor(n/12)+3 or 2*floor(n/6)+2."""
    tag = FieldTag.parse(tag)
    step = WEIGHT_STEP[tag]
    return step * (n // LENGTH_UNIT[tag]) + step


def near_extremal_weight(tag: Union[str, FieldTag], n: int) -> int:
    tag = FieldTag.parse(tag)
    return extremal_bound(tag, n) - WEIGHT_STEP[tag]


def classify(tag: Union[str, FieldTag], n: int, d: int) -> str:
    if d == extremal_bound(tag, n):
        return "extremal"
    if d == near_extremal_weight(tag, n):
        return "near-extremal"
    return "other"


def length_for(tag: Union[str, FieldTag], m: int) -> int:
    return LENGTH_UNIT[FieldTag.parse(tag)] * m


def m_for(tag: Union[str, FieldTag], n: int) -> int:
    tag = FieldTag.parse(tag)
    if n <= 0 or n % LENGTH_UNIT[tag]:
        raise ValueError(f"Length {n} is not a multiple of {LENGTH_UNIT[tag]}")
    return n // LENGTH_UNIT[tag]


def design_weights(tag: Union[str, FieldTag], m: int) -> List[int]:
    """Weights whose codeword supports form 1-designs: 3m..6m-3 (F3), 2m..3m-1 (F4)."""
    tag = FieldTag.parse(tag)
    if tag is FieldTag.F3:
        return list(range(3 * m, 6 * m - 2, 3))
    return list(range(2 * m, 3 * m, 2))


@dataclass(frozen=True)
class KnownAlpha:
    tag: FieldTag
    m: int
    alpha: int
    source: str


def _known(tag: FieldTag, m: int, values: List[int], source: str) -> List[KnownAlpha]:
    return [KnownAlpha(tag, m, value, source) for value in values]


KNOWN_ALPHAS: List[KnownAlpha] = (
    _known(FieldTag.F3, 1, [8, 24], "classified length 12")
    + _known(
        FieldTag.F3,
        2,
        [8 * b for b in list(range(2, 17)) + [18, 21, 24, 25, 30, 36, 66]],
        "classified length 24",
    )
    + _known(FieldTag.F3, 6, [357840], "extended quadratic residue code QR72")
    + _known(FieldTag.F3, 6, [213936], "Pless symmetry type code GG72")
    + _known(FieldTag.F3, 7, [2368488], "extended quadratic residue code QR84")
    + _known(FieldTag.F3, 7, [1259520], "Pless symmetry code P84")
    + _known(FieldTag.F3, 8, [15358848], "Pless symmetry code P96")
    + _known(FieldTag.F4, 1, [9], "classified length 6")
    + _known(FieldTag.F4, 2, [9, 18, 36, 45, 90], "classified length 12")
    + _known(FieldTag.F4, 3, [27, 45, 72, 81, 99, 108], "classified length 18")
    + _known(FieldTag.F4, 6, [19548, 20844, 22149, 28764], "length 36 literature codes")
)
