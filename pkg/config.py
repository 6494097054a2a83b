"""
Configuration module for the self-dual code toolkit.

This module loads configuration from environment variables and provides
default values for all required settings.
"""

import os

import psutil
from dotenv import load_dotenv

# Load environment variables from .env file if it exists
load_dotenv()

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))


def _int_env(name: str, default):
    value = os.getenv(name)
    if value is None or value.strip() == "" or value.strip().lower() == "auto":
        return default
    return int(value)


def _bool_env(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def default_threads() -> int:
    """Physical core count, falling back to logical cores."""
    return max(1, psutil.cpu_count(logical=False) or psutil.cpu_count() or 1)


# Full codeword enumeration
ENUMERATION_CONFIG = {
    "budget": _int_env("NEAREXT_BUDGET", 2 ** 31),  # max codewords generated per code
    "threads": _int_env("NEAREXT_THREADS", default_threads()),
    "table_symbols": _int_env("NEAREXT_TABLE_SYMBOLS", None),  # None = auto
    "partition_symbols": _int_env("NEAREXT_PARTITION_SYMBOLS", None),
    "show_progress": _bool_env("NEAREXT_PROGRESS", True),
}

# Information-set counting for codes past the enumeration budget
LOW_WEIGHT_CONFIG = {
    "max_message_weight": _int_env("NEAREXT_MAX_MESSAGE_WEIGHT", 6),
    "max_info_sets": _int_env("NEAREXT_MAX_INFO_SETS", 8),
    "chunk_words": 2 ** 20,
}

VERIFY_CONFIG = {
    "max_workers": _int_env("NEAREXT_VERIFY_WORKERS", 1),
    "include_optional": _bool_env("NEAREXT_INCLUDE_OPTIONAL", False),
    "design_weights": os.getenv("NEAREXT_DESIGN_WEIGHTS", "min"),  # "min" or "all"
    "design_limit": _int_env("NEAREXT_DESIGN_LIMIT", 200000),
    "memory_threshold": _int_env("NEAREXT_MEMORY_THRESHOLD", 90),  # percent
    "detailed_logs": True,
}

GLEASON_CONFIG = {
    "sweep_workers": _int_env("NEAREXT_SWEEP_WORKERS", default_threads()),
}

CATALOG_PATH = os.getenv("NEAREXT_CATALOG", os.path.join(ROOT_DIR, "catalog", "default_catalog.txt"))
REPORT_DIR = os.getenv("NEAREXT_REPORT_DIR", "reports")
LOG_DIR = os.getenv("NEAREXT_LOG_DIR", "logs")
LOG_LEVEL = os.getenv("NEAREXT_LOG_LEVEL", "INFO")
