"""
Alpha validator module: checks a minimum-weight count against the modulus,
the admissible range and the parametric enumerator of its length.
"""

import logging
from typing import Any, Dict, Optional, Tuple, Union

from codes.weight_enumerator import WeightEnumerator
from fields.galois_fields import FieldTag
from gleason.constants import ALPHA_MODULUS, LENGTH_UNIT, NEAR_EXTREMAL_MAX_M
from gleason.parametric import parametric_near_extremal
from gleason.theorems import alpha_range

logger = logging.getLogger(__name__)


def family_m(tag: FieldTag, n: int) -> Optional[int]:
    """m when length n carries a parametric family, else None."""
    unit = LENGTH_UNIT[tag]
    if n <= 0 or n % unit or n // unit > NEAR_EXTREMAL_MAX_M[tag]:
        return None
    return n // unit


class AlphaValidator:
    """Validator for alpha values and measured weight enumerators."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the alpha validator.

        Args:
            config: Dictionary containing validator configuration
        """
        self.config = config
        self.logger = logging.getLogger("validator.alpha")

    def validate(self, tag: Union[str, FieldTag], n: int, alpha: int) -> Tuple[bool, str, Dict[str, Any]]:
        """
        Check alpha against the modulus and, when the length has a family, its range.

        Returns:
            Tuple of (is_valid, reason, details)
        """
        try:
            tag = FieldTag.parse(tag)
            modulus = ALPHA_MODULUS[tag]
            details: Dict[str, Any] = {"alpha": alpha, "modulus": modulus}
            if alpha % modulus:
                return False, f"alpha={alpha} is not divisible by {modulus}", details
            details["beta"] = alpha // modulus

            m = family_m(tag, n)
            if m is None:
                return True, f"alpha={alpha} = {modulus}*{alpha // modulus}", details
            window = alpha_range(tag, m)
            details["beta_range"] = [window.beta_min, window.beta_max]
            if not window.contains(alpha):
                return False, f"beta={alpha // modulus} outside [{window.beta_min}, {window.beta_max}]", details
            return True, f"beta={alpha // modulus} in [{window.beta_min}, {window.beta_max}]", details

        except Exception as e:
            self.logger.error(f"Error in alpha validation: {str(e)}")
            return False, f"Error in alpha validation: {str(e)}", {}

    def validate_enumerator(self, enumerator: WeightEnumerator) -> Tuple[bool, str, Dict[str, Any]]:
        """
        Compare a measured enumerator with the parametric family at its own alpha.

        Returns:
            Tuple of (is_valid, reason, details)
        """
        try:
            m = family_m(enumerator.tag, enumerator.n)
            if m is None:
                return False, f"Length {enumerator.n} has no parametric family", {}
            family = parametric_near_extremal(enumerator.tag, m)
            alpha = enumerator[family.min_weight]
            mismatches = family.mismatches(enumerator)
            details = {"alpha": alpha, "mismatched_weights": mismatches}
            if mismatches:
                return False, f"Enumerator departs from the family at weights {mismatches}", details
            return True, f"Enumerator matches the family at alpha={alpha}", details

        except Exception as e:
            self.logger.error(f"Error in enumerator validation: {str(e)}")
            return False, f"Error in enumerator validation: {str(e)}", {}
