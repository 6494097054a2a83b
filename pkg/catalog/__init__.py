"""
Construction catalog: loading, dumping and building named codes.
"""

from catalog.builder import CatalogBuilder
from catalog.catalog_loader import (
    DEFAULT_CATALOG,
    CatalogEntry,
    CatalogError,
    catalog_load,
    dump_catalog,
    load_catalog_text,
    parse_line,
    select_entries,
)

__all__ = [
    "DEFAULT_CATALOG",
    "CatalogBuilder",
    "CatalogEntry",
    "CatalogError",
    "catalog_load",
    "dump_catalog",
    "load_catalog_text",
    "parse_line",
    "select_entries",
]
