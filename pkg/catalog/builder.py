"""
Catalog builder: turns catalog entries into codes, resolving neighbor and
direct-sum bases through the same catalog.
"""

import logging
import threading
from typing import Any, Dict, List, Optional

from catalog.catalog_loader import CatalogEntry, CatalogError
from codes.linear_code import LinearCode
from constructions.registry import get_construction


class CatalogBuilder:
    """Builds catalog codes on demand and memoises them by id."""

    def __init__(self, entries: List[CatalogEntry], config: Optional[Dict[str, Any]] = None):
        """
        Initialize the builder.

        Args:
            entries: Loaded catalog entries
            config: Passed through to each construction
        """
        self.entries = {entry.id: entry for entry in entries}
        self.config = config or {}
        self.logger = logging.getLogger("catalog.builder")
        self._codes: Dict[str, LinearCode] = {}
        self._lock = threading.RLock()

    def entry(self, entry_id: str) -> CatalogEntry:
        try:
            return self.entries[entry_id]
        except KeyError:
            raise CatalogError(f"Unknown catalog id {entry_id!r}")

    def build(self, entry_id: str) -> LinearCode:
        """
        Build (or fetch) the code of one entry.

        Raises:
            CatalogError: for unknown ids, base cycles, or a length mismatch
        """
        with self._lock:
            return self._build(entry_id, [])

    def _build(self, entry_id: str, stack: List[str]) -> LinearCode:
        if entry_id in self._codes:
            return self._codes[entry_id]
        if entry_id in stack:
            raise CatalogError(f"Base cycle: {' -> '.join(stack + [entry_id])}")

        entry = self.entry(entry_id)
        params: Dict[str, Any] = dict(entry.params)
        if entry.family == "neighbor":
            params["base"] = self._build(entry.params["base"], stack + [entry_id])
        elif entry.family == "direct_sum":
            params["parts"] = [self._build(part, stack + [entry_id]) for part in entry.base_ids]

        construction = get_construction(entry.family, entry.field, self.config)
        try:
            code = construction.build(params, name=entry.id)
        except CatalogError:
            raise
        except ValueError as e:
            raise CatalogError(f"{entry.id}: {str(e)}", entry.line)

        if code.n != entry.length:
            raise CatalogError(f"{entry.id} built a code of length {code.n}, catalog says {entry.length}", entry.line)
        self.logger.debug(f"Built {code.describe()}")
        self._codes[entry_id] = code
        return code
