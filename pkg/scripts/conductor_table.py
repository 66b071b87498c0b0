#!/usr/bin/env python3
"""Sweep the built-in curve over all primes up to a bound and print the
conductor table with the per-prime certification summary.

Usage: python scripts/conductor_table.py [--max 100] [--jobs N]
"""

import argparse
import sys

from ffec.cli import RunConfig, run
from ffec.gfpoly import is_prime


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=100, help="largest prime to include")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    primes = tuple(n for n in range(2, args.max + 1) if is_prime(n))
    config = RunConfig(primes=primes, curve=None, fmt="text", table=True, jobs=args.jobs)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
