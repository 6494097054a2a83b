"""
Design validator module: scalar classes of codewords and the 1-design
property of their supports.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from codes.enumeration import CodewordEnumerator
from codes.linear_code import LinearCode
from fields.galois_fields import FieldMismatchError, FieldTag, inv_table, mul_table, to_int_array
from fields.vectors import FieldVector

logger = logging.getLogger(__name__)


@dataclass
class DesignInstance:
    """Blocks = supports of one word per scalar class, as sorted 1-based index lists."""

    v: int
    k: int
    b: int
    r: Optional[int]
    blocks: List[List[int]] = field(default_factory=list)
    distinct_supports: bool = True

    @property
    def is_1_design(self) -> bool:
        return self.b > 0 and self.r is not None and self.b * self.k == self.v * self.r

    def to_json(self, include_blocks: bool = False) -> Dict[str, Any]:
        data = {
            "v": self.v,
            "k": self.k,
            "b": self.b,
            "r": self.r,
            "is_1_design": self.is_1_design,
            "distinct_supports": self.distinct_supports,
        }
        if include_blocks:
            data["blocks"] = self.blocks
        return data


def class_representatives(tag: FieldTag, words) -> np.ndarray:
    """
    Normalise every word so its first nonzero entry is 1 and drop repeats.

    Args:
        tag: Field of the words
        words: int matrix of nonzero words, shape (N, n)

    Returns:
        Sorted unique representatives, one per scalar class
    """
    words = to_int_array(words)
    if words.ndim != 2 or words.shape[0] == 0:
        return words.reshape(0, words.shape[-1] if words.ndim == 2 else 0)
    nonzero = words != 0
    if not nonzero.any(axis=1).all():
        raise ValueError("The zero word has no scalar class")
    lead = words[np.arange(words.shape[0]), nonzero.argmax(axis=1)]
    normalised = mul_table(tag)[inv_table(tag)[lead][:, None], words]
    return np.unique(normalised, axis=0)


def scalar_classes(words: Sequence[FieldVector]) -> List[FieldVector]:
    """One representative (first nonzero entry 1) per orbit {c*x : c != 0}."""
    if not words:
        return []
    tag = words[0].tag
    if any(w.tag is not tag or len(w) != len(words[0]) for w in words):
        raise FieldMismatchError("Scalar classes need words of one field and length")
    reps = class_representatives(tag, np.array([w.values for w in words], dtype=np.int64))
    return [FieldVector(tag, tuple(row)) for row in reps]


def design_from_words(tag: FieldTag, n: int, weight: int, words) -> DesignInstance:
    reps = class_representatives(tag, words)
    incidence = reps != 0
    supports = np.unique(incidence, axis=0) if len(reps) else incidence
    counts = incidence.sum(axis=0)
    b = int(reps.shape[0])
    r = int(counts[0]) if b and np.all(counts == counts[0]) else None
    blocks = [sorted(int(i) + 1 for i in np.flatnonzero(row)) for row in incidence]
    return DesignInstance(
        v=n,
        k=weight,
        b=b,
        r=r,
        blocks=blocks,
        distinct_supports=len(supports) == b,
    )


def one_design_check(code: LinearCode, weight: int, config: Optional[Dict[str, Any]] = None) -> DesignInstance:
    """
    Build the support design of the weight-``weight`` words by full enumeration.

    Raises:
        BudgetExceededError: if the code is too large to enumerate
    """
    words = CodewordEnumerator(code, config).words_of_weight(weight)
    return design_from_words(code.tag, code.n, weight, words)


class DesignValidator:
    """Validator for the 1-design property of codeword supports."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the design validator.

        Args:
            config: Dictionary containing validator configuration
        """
        self.config = config
        self.require_distinct = config.get("require_distinct_supports", False)
        self.logger = logging.getLogger("validator.design")

    def validate(
        self, code: LinearCode, weight: int, words=None, require_distinct: Optional[bool] = None
    ) -> Tuple[bool, str, Dict[str, Any]]:
        """
        Check that the supports of the weight-``weight`` words form a 1-design.

        Args:
            code: Code under test
            weight: Weight of the words forming the blocks
            words: Words of that weight if already enumerated
            require_distinct: Fail when two scalar classes share a support;
                defaults to the ``require_distinct_supports`` config key

        Returns:
            Tuple of (is_valid, reason, details)
        """
        try:
            if words is None:
                design = one_design_check(code, weight, self.config.get("enumeration", {}))
            else:
                design = design_from_words(code.tag, code.n, weight, words)
            details = design.to_json()

            if design.b == 0:
                return False, f"No codewords of weight {weight}", details
            if not design.is_1_design:
                return False, f"Supports of weight {weight} are not a 1-design", details
            if require_distinct is None:
                require_distinct = self.require_distinct
            if require_distinct and not design.distinct_supports:
                return False, f"Scalar classes of weight {weight} share supports", details

            reason = f"1-({design.v},{design.k},{design.r}) design with {design.b} blocks"
            self.logger.debug(f"{code.describe()}: {reason}")
            return True, reason, details

        except Exception as e:
            self.logger.error(f"Error in design validation: {str(e)}")
            return False, f"Error in design validation: {str(e)}", {}
