"""
Base test configuration and utilities for all test modules.
"""

import os
import shutil
import sys
import tempfile
import unittest
import logging

# Configure logging for tests
logging.basicConfig(level=logging.WARNING)
logger = logging.getLogger(__name__)

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

DATA_DIR = os.path.join(PROJECT_ROOT, "tests", "data")

SLOW = os.getenv("NEAREXT_SLOW_TESTS") == "1"
slow_test = unittest.skipUnless(SLOW, "set NEAREXT_SLOW_TESTS=1 for long enumeration runs")

# Small engine settings shared by the tests
ENUMERATION = {"budget": 2 ** 31, "threads": 1, "show_progress": False}
PARALLEL_ENUMERATION = {"budget": 2 ** 31, "threads": os.cpu_count() or 1, "show_progress": False}


# Ensure environment variables are set for tests
def setup_test_environment():
    """Set up environment variables for testing."""
    test_env_vars = {
        'NEAREXT_THREADS': '1',
        'NEAREXT_PROGRESS': 'false',
        'NEAREXT_LOG_LEVEL': 'WARNING',
    }

    for var_name, default_value in test_env_vars.items():
        if var_name not in os.environ:
            os.environ[var_name] = default_value

# Call setup at import time
setup_test_environment()


def load_parametric_tables():
    """{(field, length): {weight: (s, t)}} from the stored reference tables."""
    tables = {}
    with open(os.path.join(DATA_DIR, "parametric_tables.txt"), "r") as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            tag, n, weight, s, t = line.split()
            tables.setdefault((tag, int(n)), {})[int(weight)] = (int(s), int(t))
    return tables


class BaseTestCase(unittest.TestCase):
    """Base test case with common utilities for all tests."""

    def setUp(self):
        """Set up a scratch directory for each test."""
        self.temp_dir = tempfile.mkdtemp(prefix="nearext_test_")

    def tearDown(self):
        """Clean up after each test."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def temp_path(self, name: str) -> str:
        return os.path.join(self.temp_dir, name)
