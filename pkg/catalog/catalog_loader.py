"""
Catalog loader module for the line-oriented construction catalog.

Format, one entry per line, ``#`` starts a comment:

    <id> <family> <field> <length> <param>=<value> ... [expect <key>=<value> ...]

Expected keys are ``alpha``, ``min_weight``, ``a<weight>``, ``self_dual``,
``check`` (only ``optional``) and ``cite``.
"""

import logging
import os
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from constructions.registry import FAMILIES
from fields.galois_fields import FieldMismatchError, FieldTag, parse_row, parse_symbol

logger = logging.getLogger("catalog.loader")

DEFAULT_CATALOG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "default_catalog.txt")

_COUNT_KEY = re.compile(r"^a(\d+)$")
_INT_KEYS = ("alpha", "min_weight")


class CatalogError(ValueError):
    """Raised for malformed catalog content; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass
class CatalogEntry:
    """One named construction with the facts claimed for it."""

    id: str
    family: str
    field: FieldTag
    length: int
    params: Dict[str, str] = field(default_factory=dict)
    expected: Dict[str, Any] = field(default_factory=dict)
    cite: Optional[str] = None
    optional: bool = False
    line: Optional[int] = None

    @property
    def base_ids(self) -> List[str]:
        """Ids this entry is built from."""
        if self.family == "neighbor":
            return [self.params["base"]]
        if self.family == "direct_sum":
            return self.params["parts"].split(",")
        return []

    def expected_counts(self) -> Dict[int, int]:
        """The ``a<weight>=<count>`` expectations."""
        counts = {}
        for key, value in self.expected.items():
            match = _COUNT_KEY.match(key)
            if match:
                counts[int(match.group(1))] = value
        return counts

    def serialize(self) -> str:
        tokens = [self.id, self.family, self.field.value, str(self.length)]
        tokens += [f"{key}={value}" for key, value in self.params.items()]
        tail = []
        for key in _INT_KEYS:
            if key in self.expected:
                tail.append(f"{key}={self.expected[key]}")
        for weight, count in sorted(self.expected_counts().items()):
            tail.append(f"a{weight}={count}")
        if "self_dual" in self.expected:
            tail.append(f"self_dual={'true' if self.expected['self_dual'] else 'false'}")
        if self.optional:
            tail.append("check=optional")
        if self.cite:
            tail.append(f"cite={self.cite}")
        if tail:
            tokens += ["expect"] + tail
        return " ".join(tokens)


def _parse_expected(key: str, value: str, line: int) -> Any:
    if key in _INT_KEYS or _COUNT_KEY.match(key):
        if not value.isdigit():
            raise CatalogError(f"{key} must be a nonnegative integer, got {value!r}", line)
        return int(value)
    if key == "self_dual":
        if value not in ("true", "false"):
            raise CatalogError(f"self_dual must be true or false, got {value!r}", line)
        return value == "true"
    raise CatalogError(f"Unknown expected key {key!r}", line)


def _expected_row_lengths(entry: CatalogEntry) -> Dict[str, int]:
    n = entry.length
    if entry.family in ("four_circ", "four_negacirc"):
        return {"rA": n // 4, "rB": n // 4}
    if entry.family == "bordered_dcc":
        return {"rA": n // 2 - 1}
    if entry.family == "mu_circ":
        return {"rA": n // 2}
    if entry.family == "ito":
        return {key: 9 for key in ("rA", "rB", "rC", "rD")}
    if entry.family == "neighbor":
        return {"x": n // 2}
    return {}


def _required_params(family: str) -> List[str]:
    return {
        "four_circ": ["rA", "rB"],
        "four_negacirc": ["rA", "rB"],
        "bordered_dcc": ["rA"],
        "mu_circ": ["rA", "mu"],
        "ito": ["rA", "rB", "rC", "rD"],
        "neighbor": ["base", "x"],
        "direct_sum": ["parts"],
    }[family]


def _check_entry(entry: CatalogEntry) -> None:
    line = entry.line
    if entry.family in ("four_circ", "four_negacirc") and entry.length % 4:
        raise CatalogError(f"{entry.family} length must be a multiple of 4", line)
    if entry.family in ("bordered_dcc", "mu_circ", "neighbor") and entry.length % 2:
        raise CatalogError(f"{entry.family} length must be even", line)
    if entry.family == "ito" and (entry.field is not FieldTag.F3 or entry.length != 72):
        raise CatalogError("ito entries are ternary of length 72", line)

    missing = [key for key in _required_params(entry.family) if key not in entry.params]
    if missing:
        raise CatalogError(f"{entry.id}: missing parameters {', '.join(missing)}", line)

    try:
        for key, size in _expected_row_lengths(entry).items():
            row = parse_row(entry.field, entry.params[key])
            if len(row) != size:
                raise CatalogError(f"{entry.id}: {key} has length {len(row)}, expected {size}", line)
        if entry.family == "mu_circ" and parse_symbol(entry.field, entry.params["mu"]) == 0:
            raise CatalogError(f"{entry.id}: mu must be nonzero", line)
    except FieldMismatchError as e:
        raise CatalogError(f"{entry.id}: {str(e)}", line)

    if (entry.expected or entry.optional) and not entry.cite:
        raise CatalogError(f"{entry.id}: expected values need a cite= source", line)


def parse_line(text: str, line: Optional[int] = None) -> Optional[CatalogEntry]:
    """Parse one catalog line; blank and comment lines give None."""
    text = text.split("#", 1)[0].strip()
    if not text:
        return None
    tokens = text.split()
    if len(tokens) < 4:
        raise CatalogError(f"Expected '<id> <family> <field> <length> ...', got {text!r}", line)

    entry_id, family, field_token, length_token = tokens[:4]
    if family not in FAMILIES:
        raise CatalogError(f"Unknown family {family!r}", line)
    try:
        tag = FieldTag.parse(field_token)
    except FieldMismatchError as e:
        raise CatalogError(str(e), line)
    if not length_token.isdigit() or int(length_token) == 0:
        raise CatalogError(f"Invalid length {length_token!r}", line)

    entry = CatalogEntry(id=entry_id, family=family, field=tag, length=int(length_token), line=line)
    in_expect = False
    for token in tokens[4:]:
        if token == "expect":
            if in_expect:
                raise CatalogError("Repeated 'expect'", line)
            in_expect = True
            continue
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise CatalogError(f"Expected key=value, got {token!r}", line)
        if not in_expect:
            if key in entry.params:
                raise CatalogError(f"Duplicate parameter {key!r}", line)
            entry.params[key] = value
        elif key == "cite":
            entry.cite = value
        elif key == "check":
            if value != "optional":
                raise CatalogError(f"Unknown check mode {value!r}", line)
            entry.optional = True
        else:
            entry.expected[key] = _parse_expected(key, value, line)

    _check_entry(entry)
    return entry


def load_catalog_text(text: str) -> List[CatalogEntry]:
    entries: List[CatalogEntry] = []
    seen: Dict[str, CatalogEntry] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        entry = parse_line(raw, number)
        if entry is None:
            continue
        if entry.id in seen:
            raise CatalogError(f"Duplicate id {entry.id!r} (first on line {seen[entry.id].line})", number)
        seen[entry.id] = entry
        entries.append(entry)

    for entry in entries:
        for base_id in entry.base_ids:
            base = seen.get(base_id)
            if base is None:
                raise CatalogError(f"{entry.id} refers to unknown base {base_id!r}", entry.line)
            if base.field is not entry.field:
                raise CatalogError(f"{entry.id} and its base {base_id} are over different fields", entry.line)
    return entries


def catalog_load(path: Optional[str] = None) -> List[CatalogEntry]:
    """
    Load and validate a catalog file.

    Args:
        path: Catalog path; defaults to the shipped catalog

    Returns:
        Entries in file order
    """
    path = path or DEFAULT_CATALOG
    with open(path, "r", encoding="utf-8") as f:
        entries = load_catalog_text(f.read())
    logger.info(f"Loaded {len(entries)} catalog entries from {path}")
    return entries


def dump_catalog(entries: List[CatalogEntry]) -> str:
    return "".join(entry.serialize() + "\n" for entry in entries)


def select_entries(entries: List[CatalogEntry], ids: Optional[List[str]] = None) -> List[CatalogEntry]:
    """
    Pick entries by id. ``A..B`` selects a run of ids in catalog order.

    Raises:
        KeyError: for an unknown id
    """
    if not ids or ids == ["all"]:
        return list(entries)
    order = [entry.id for entry in entries]
    index = {entry_id: i for i, entry_id in enumerate(order)}
    chosen: List[CatalogEntry] = []
    for token in ids:
        if ".." in token and token not in index:
            start, _, stop = token.partition("..")
            if start not in index or stop not in index:
                raise KeyError(token)
            chosen.extend(entries[index[start] : index[stop] + 1])
        elif token in index:
            chosen.append(entries[index[token]])
        else:
            raise KeyError(token)
    return chosen
