"""
Checks derived from the parametric enumerators: divisibility of the
coefficients, the admissible alpha range, the extremal specialisation and
the literature alpha values.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, List, Optional, Union

from codes.weight_enumerator import WeightEnumerator
from fields.galois_fields import FieldTag
from gleason.constants import ALPHA_MODULUS, EXTREMAL_NONEXISTENCE_M, KNOWN_ALPHAS, LENGTH_UNIT, NEAR_EXTREMAL_MAX_M
from gleason.parametric import check_m, parametric_near_extremal

logger = logging.getLogger("gleason.sweep")


@dataclass
class DivisibilityReport:
    tag: str
    m: int
    n: int
    modulus: int
    checked_weights: List[int]
    violations: List[int]
    sum_rule: bool

    @property
    def passed(self) -> bool:
        return not self.violations and self.sum_rule

    def to_json(self) -> Dict[str, Any]:
        data = asdict(self)
        data["checked_weights"] = len(self.checked_weights)
        data["status"] = "pass" if self.passed else "fail"
        return data


@dataclass
class AlphaRange:
    tag: str
    m: int
    modulus: int
    alpha_min: int
    alpha_max: int
    beta_min: int
    beta_max: int
    lower_weight: Optional[int] = None
    upper_weight: Optional[int] = None

    @property
    def empty(self) -> bool:
        return self.beta_min > self.beta_max

    def contains(self, alpha: int) -> bool:
        return alpha % self.modulus == 0 and self.beta_min <= alpha // self.modulus <= self.beta_max

    def to_json(self) -> Dict[str, Any]:
        data = asdict(self)
        data["empty"] = self.empty
        return data


@dataclass
class ExtremalReport:
    tag: str
    m: int
    n: int
    coefficients: Dict[int, int]
    negative_weights: List[int]
    violations: List[int]
    beyond_extremal_limit: bool

    @property
    def nonnegative(self) -> bool:
        return not self.negative_weights

    @property
    def passed(self) -> bool:
        """Coefficients above the minimum weight are divisible by the modulus (vacuous when some are negative)."""
        return not self.nonnegative or not self.violations

    @property
    def enumerator(self) -> Optional[WeightEnumerator]:
        if not self.nonnegative:
            return None
        return WeightEnumerator(self.tag, self.n, self.coefficients)

    def to_json(self) -> Dict[str, Any]:
        return {
            "tag": self.tag,
            "m": self.m,
            "n": self.n,
            "coefficients": [[w, str(c)] for w, c in sorted(self.coefficients.items()) if c],
            "negative_weights": self.negative_weights,
            "violations": self.violations,
            "beyond_extremal_limit": self.beyond_extremal_limit,
            "status": "pass" if self.passed else "fail",
        }


def divisibility_check(tag: Union[str, FieldTag], m: int) -> DivisibilityReport:
    """s_w = 0 mod 8 (F3) / mod 9 (F4) at every weight above the minimum, plus the sum rule."""
    tag = FieldTag.parse(tag)
    family = parametric_near_extremal(tag, m)
    modulus = ALPHA_MODULUS[tag]
    checked = [w for w in sorted(family.terms) if w > family.min_weight]
    violations = [w for w in checked if family.s(w) % modulus]
    total_s, total_t = family.totals()
    sum_rule = total_s == tag.order ** (family.n // 2) and total_t == 0
    if violations or not sum_rule:
        logger.error(f"{tag.value} m={m}: violations at {violations}, sum rule {'ok' if sum_rule else 'broken'}")
    return DivisibilityReport(tag.value, m, family.n, modulus, checked, violations, sum_rule)


def alpha_range(tag: Union[str, FieldTag], m: int) -> AlphaRange:
    """
    Intersect {alpha : s_w + t_w alpha >= 0 for all w} with alpha >= 1 and the
    modulus; the result is reported as a beta interval (alpha = modulus * beta).
    """
    tag = FieldTag.parse(tag)
    family = parametric_near_extremal(tag, m)
    modulus = ALPHA_MODULUS[tag]
    lo, hi = 1, None
    lower_weight = upper_weight = None
    for weight, s, t in family.nonzero_terms():
        if t > 0:
            bound = -(s // t)
            if bound > lo:
                lo, lower_weight = bound, weight
        elif t < 0:
            bound = s // -t
            if hi is None or bound < hi:
                hi, upper_weight = bound, weight
    if hi is None:
        raise ArithmeticError(f"No upper bound on alpha for {tag.value} m={m}")
    result = AlphaRange(
        tag=tag.value,
        m=m,
        modulus=modulus,
        alpha_min=lo,
        alpha_max=hi,
        beta_min=-(-lo // modulus),
        beta_max=hi // modulus,
        lower_weight=lower_weight,
        upper_weight=upper_weight,
    )
    if result.empty:
        logger.warning(f"{tag.value} m={m}: empty alpha range, no near-extremal code of length {family.n}")
    return result


def extremal_enumerator(tag: Union[str, FieldTag], m: int) -> ExtremalReport:
    """The alpha = 0 member of the family, with the corollary divisibility checked."""
    tag = FieldTag.parse(tag)
    family = parametric_near_extremal(tag, m)
    modulus = ALPHA_MODULUS[tag]
    coefficients = family.coefficients_at(0)
    negative = [w for w, c in coefficients.items() if c < 0]
    violations = [w for w, c in coefficients.items() if w > family.min_weight and c % modulus]
    return ExtremalReport(
        tag=tag.value,
        m=m,
        n=family.n,
        coefficients=coefficients,
        negative_weights=negative,
        violations=violations,
        beyond_extremal_limit=m >= EXTREMAL_NONEXISTENCE_M[tag],
    )


def known_alpha_report(tag: Optional[Union[str, FieldTag]] = None) -> List[Dict[str, Any]]:
    """Check every literature alpha against the modulus and the admissible range."""
    rows = []
    for known in KNOWN_ALPHAS:
        if tag is not None and known.tag is not FieldTag.parse(tag):
            continue
        window = alpha_range(known.tag, known.m)
        rows.append(
            {
                "tag": known.tag.value,
                "m": known.m,
                "n": LENGTH_UNIT[known.tag] * known.m,
                "alpha": known.alpha,
                "beta": known.alpha // window.modulus if known.alpha % window.modulus == 0 else None,
                "source": known.source,
                "status": "pass" if window.contains(known.alpha) else "fail",
            }
        )
    return rows


def sweep(tag: Union[str, FieldTag], m_values: Optional[Iterable[int]] = None, workers: int = 1) -> List[DivisibilityReport]:
    """divisibility_check over many m; defaults to every m where near-extremal codes may exist."""
    tag = FieldTag.parse(tag)
    m_values = list(m_values) if m_values is not None else list(range(1, NEAR_EXTREMAL_MAX_M[tag] + 1))
    for m in m_values:
        check_m(tag, m)
    logger.info(f"Checking divisibility for {tag.value} over {len(m_values)} lengths")
    if workers <= 1:
        return [divisibility_check(tag, m) for m in m_values]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda m: divisibility_check(tag, m), m_values))
