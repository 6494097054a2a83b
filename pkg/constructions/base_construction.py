"""
Base construction module for code building recipes.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from codes.linear_code import LinearCode
from fields.galois_fields import FieldMismatchError, FieldTag, parse_row, to_int_array
from fields.vectors import FieldVector

logger = logging.getLogger(__name__)

RowLike = Union[FieldVector, str, Sequence[int], np.ndarray]


def coerce_row(tag: FieldTag, value: RowLike, length: Optional[int] = None, label: str = "row") -> np.ndarray:
    """
    Normalise a first row given as FieldVector, token string or int sequence.

    Args:
        tag: Field the row must belong to
        value: The row
        length: Required length, if any
        label: Name used in error messages

    Returns:
        int64 array of field values
    """
    if isinstance(value, FieldVector):
        if value.tag is not tag:
            raise FieldMismatchError(f"{label} is over {value.tag.value}, expected {tag.value}")
        row = np.array(value.values, dtype=np.int64)
    elif isinstance(value, str):
        row = np.array(parse_row(tag, value), dtype=np.int64)
    else:
        row = to_int_array(value).ravel()
        if np.any((row < 0) | (row >= tag.order)):
            raise FieldMismatchError(f"{label} has entries outside {tag.value}")
    if length is not None and row.size != length:
        raise ValueError(f"{label} has length {row.size}, expected {length}")
    return row


class BaseConstruction(ABC):
    """Base class for all code construction families."""

    family = "base"

    def __init__(self, tag: Union[str, FieldTag], config: Optional[Dict[str, Any]] = None):
        """
        Initialize the construction.

        Args:
            tag: Field the constructed codes live over
            config: Optional construction settings
        """
        self.tag = FieldTag.parse(tag)
        self.config = config or {}
        self.logger = logging.getLogger(f"construction.{self.family}")

    @abstractmethod
    def build(self, params: Dict[str, Any], name: Optional[str] = None) -> LinearCode:
        """
        Build a code from family specific parameters.

        Args:
            params: Parameter map as stored in a catalog entry
            name: Label for the resulting code

        Returns:
            The constructed code (self-duality is not asserted)
        """
        pass

    def systematic(self, block: np.ndarray, name: Optional[str] = None) -> LinearCode:
        """Code generated by (I | block)."""
        block = to_int_array(block)
        generator = np.hstack([np.eye(block.shape[0], dtype=np.int64), block])
        code = LinearCode(self.tag, generator, name=name)
        self.logger.debug(f"Built {code.describe()}")
        return code

    def require(self, params: Dict[str, Any], *keys: str) -> None:
        missing = [key for key in keys if key not in params]
        if missing:
            raise ValueError(f"{self.family} needs parameters: {', '.join(missing)}")
