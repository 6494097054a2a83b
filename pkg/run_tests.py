#!/usr/bin/env python3
"""
Runs the test suite, one module or all of them.

    python run_tests.py [--category gleason] [--slow] [--pytest]

Plain discovery works as well: ``python -m unittest discover tests``.
"""

import argparse
import os
import sys
import unittest

CATEGORIES = ["fields", "codes", "constructions", "gleason", "validators", "catalog", "integration"]


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the near-extremal code toolkit tests")
    parser.add_argument("--category", "-c", choices=["all"] + CATEGORIES, default="all")
    parser.add_argument("--slow", action="store_true", help="Include the long enumeration runs")
    parser.add_argument("--pytest", action="store_true", help="Run under pytest with coverage")
    parser.add_argument("--verbose", "-v", action="store_true")
    args = parser.parse_args()

    if args.slow:
        os.environ["NEAREXT_SLOW_TESTS"] = "1"
    root = os.path.dirname(os.path.abspath(__file__))
    sys.path.insert(0, root)
    target = "tests" if args.category == "all" else f"tests/test_{args.category}.py"

    if args.pytest:
        import pytest

        return int(pytest.main([os.path.join(root, target), "--cov", root] + (["-v"] if args.verbose else [])))

    loader = unittest.TestLoader()
    if args.category == "all":
        suite = loader.discover(os.path.join(root, "tests"), top_level_dir=root)
    else:
        suite = loader.loadTestsFromName(f"tests.test_{args.category}")
    result = unittest.TextTestRunner(verbosity=2 if args.verbose else 1).run(suite)
    return 0 if result.wasSuccessful() else 1


if __name__ == "__main__":
    sys.exit(main())
