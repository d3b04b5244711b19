#!/usr/bin/env python3
"""Emit every case table (pole orders and density bounds) as markdown."""

import sys

from polebound.cli import main
from polebound.tables import TABLE_IDS


def run() -> int:
    fmt = sys.argv[1] if len(sys.argv) > 1 else "md"
    for tid in TABLE_IDS:
        print(f"\n## table {tid}\n")
        code = main(["table", "--id", tid, "--format", fmt])
        if code:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(run())
