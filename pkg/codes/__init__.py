"""
__init__.py file to make the codes directory a proper package.
"""

from codes.enumeration import BudgetExceededError, CodewordEnumerator, weight_enumerator_full, words_of_weight
from codes.linear_code import LinearCode, contains, dual, is_self_dual, rref
from codes.low_weight import LowWeightResult, count_low_weight
from codes.weight_enumerator import WeightEnumerator

__all__ = [
    "BudgetExceededError",
    "CodewordEnumerator",
    "LinearCode",
    "LowWeightResult",
    "WeightEnumerator",
    "contains",
    "count_low_weight",
    "dual",
    "is_self_dual",
    "rref",
    "weight_enumerator_full",
    "words_of_weight",
]
