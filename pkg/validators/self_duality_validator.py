"""
Self-duality validator module.
"""

import logging
from typing import Any, Dict, Tuple

import numpy as np

from codes.linear_code import LinearCode, admissible_length, gram_matrix
from fields.vectors import default_form

logger = logging.getLogger(__name__)


class SelfDualityValidator:
    """Validator for Euclidean (F3) and Hermitian (F4) self-duality."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the self-duality validator.

        Args:
            config: Dictionary containing validator configuration
        """
        self.config = config
        self.logger = logging.getLogger("validator.self_duality")

    def validate(self, code: LinearCode) -> Tuple[bool, str, Dict[str, Any]]:
        """
        Check k = n/2, the length condition and that the generator is self-orthogonal.

        Args:
            code: Code under test

        Returns:
            Tuple of (is_valid, reason, details)
        """
        try:
            form = default_form(code.tag)
            details = {"n": code.n, "k": code.k, "form": form.value, "admissible_length": admissible_length(code.tag, code.n)}

            if not details["admissible_length"]:
                return False, f"No {code.tag.value} self-dual code has length {code.n}", details
            if 2 * code.k != code.n:
                return False, f"Dimension {code.k} is not half of {code.n}", details

            gram = gram_matrix(code, form).view(np.ndarray)
            bad = int(np.count_nonzero(gram))
            details["nonorthogonal_pairs"] = bad
            if bad:
                return False, f"{bad} generator pairs are not {form.value} orthogonal", details

            self.logger.debug(f"{code.describe()} is {form.value} self-dual")
            return True, f"{form.value.capitalize()} self-dual [{code.n},{code.k}]", details

        except Exception as e:
            self.logger.error(f"Error in self-duality validation: {str(e)}")
            return False, f"Error in self-duality validation: {str(e)}", {}
