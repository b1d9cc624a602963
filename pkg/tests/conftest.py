"""Shared test configuration.

Makes the brute-force oracle module importable from every test file and
registers a marker for the long-running acceptance checks.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
