"""
Lemma validator module: the minimum-weight count of a near-extremal code is
divisible by 8 (ternary) or 9 (quaternary), re-derived from the replication
number of the support design.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Tuple

from codes.enumeration import CodewordEnumerator
from codes.linear_code import LinearCode
from codes.low_weight import count_low_weight
from codes.weight_enumerator import WeightEnumerator
from gleason.constants import ALPHA_MODULUS, LENGTH_UNIT, SCALAR_CLASS_SIZE, WEIGHT_STEP

logger = logging.getLogger(__name__)


class NotNearExtremalError(ValueError):
    """Raised when a code's minimum weight is not the near-extremal weight."""


@dataclass
class LemmaReport:
    n: int
    m: int
    weight: int
    count: int
    modulus: int
    class_size: int
    replication: Optional[int]

    @property
    def divisible(self) -> bool:
        return self.count % self.modulus == 0

    @property
    def passed(self) -> bool:
        return self.divisible and self.replication is not None and self.replication > 0

    def to_json(self) -> Dict[str, Any]:
        data = asdict(self)
        data["beta"] = self.count // self.modulus if self.divisible else None
        data["status"] = "pass" if self.passed else "fail"
        return data


def lemma_check(code: LinearCode, enumerator: Optional[WeightEnumerator] = None, config: Optional[Dict[str, Any]] = None) -> LemmaReport:
    """
    Args:
        code: A near-extremal self-dual code of length 12m (F3) or 6m (F4)
        enumerator: Counts up to the near-extremal weight, if already known
        config: ``enumeration`` and ``low_weight`` settings used when counting

    Raises:
        NotNearExtremalError: if the length is not 12m / 6m or the minimum weight is not 3m / 2m
    """
    config = config or {}
    tag, n = code.tag, code.n
    unit = LENGTH_UNIT[tag]
    if n <= 0 or n % unit:
        raise NotNearExtremalError(f"Length {n} is not a multiple of {unit}")
    m = n // unit
    weight = WEIGHT_STEP[tag] * m

    if enumerator is None:
        engine = CodewordEnumerator(code, config.get("enumeration", {}))
        if engine.fits_budget():
            enumerator = engine.weight_enumerator()
        else:
            result = count_low_weight(code, weight, config.get("low_weight", {}))
            if not result.certified:
                raise NotNearExtremalError(f"Could not certify counts up to weight {weight}")
            enumerator = result.enumerator()

    lower = [w for w in range(1, weight) if enumerator[w]]
    if lower or enumerator[weight] == 0:
        raise NotNearExtremalError(f"{code.describe()} has minimum weight {enumerator.min_weight()}, expected {weight}")

    count = enumerator[weight]
    class_size = SCALAR_CLASS_SIZE[tag]
    # (count / class_size) blocks of size `weight` on n points, each point in r blocks
    numerator, denominator = count * weight, class_size * n
    replication = numerator // denominator if count % class_size == 0 and numerator % denominator == 0 else None
    return LemmaReport(n, m, weight, count, ALPHA_MODULUS[tag], class_size, replication)


class LemmaValidator:
    """Validator for the minimum-weight count divisibility."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the lemma validator.

        Args:
            config: Dictionary containing validator configuration
        """
        self.config = config
        self.logger = logging.getLogger("validator.lemma")

    def validate(self, code: LinearCode, enumerator: Optional[WeightEnumerator] = None) -> Tuple[bool, str, Dict[str, Any]]:
        """
        Returns:
            Tuple of (is_valid, reason, details)
        """
        try:
            report = lemma_check(code, enumerator, self.config)
            details = report.to_json()
            if report.passed:
                reason = f"A_{report.weight} = {report.count} = {report.modulus}*{report.count // report.modulus}, r = {report.replication}"
            elif not report.divisible:
                reason = f"A_{report.weight} = {report.count} is not divisible by {report.modulus}"
            else:
                reason = f"A_{report.weight} = {report.count} gives no integral replication number"
            self.logger.debug(f"{code.describe()}: {reason}")
            return report.passed, reason, details

        except NotNearExtremalError as e:
            return False, str(e), {}
        except Exception as e:
            self.logger.error(f"Error in lemma validation: {str(e)}")
            return False, f"Error in lemma validation: {str(e)}", {}
