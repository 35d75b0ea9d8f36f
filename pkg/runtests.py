#!/usr/bin/env python
import argparse
import os
import sys
import unittest
from pathlib import Path

BASE_PATH = Path(__file__).parent

if __name__ == "__main__":
    parser = argparse.ArgumentParser(__file__)
    parser.add_argument(
        "target",
        default="tests",
        nargs="?",
        help="Set the test you want to trigger (ex: 'tests.test_bounds')",
    )
    parser.add_argument(
        "--acceptance",
        action="store_true",
        help="Run campaigns at full acceptance size (slow)",
    )
    args = parser.parse_args()

    if args.acceptance:
        os.environ["BLOCH_LAB_ACCEPTANCE"] = "1"
    sys.path.insert(0, str(BASE_PATH))
    loader = unittest.TestLoader()
    if args.target == "tests":
        suite = loader.discover("tests", top_level_dir=str(BASE_PATH))
    else:
        suite = loader.loadTestsFromName(args.target)
    result = unittest.TextTestRunner(verbosity=2).run(suite)
    sys.exit(not result.wasSuccessful())
