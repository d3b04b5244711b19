#!/usr/bin/env python3
"""Run the full verification against the published values; exit 0 iff clean."""

import sys

from polebound.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all"] + sys.argv[1:]))
