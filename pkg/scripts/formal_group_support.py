#!/usr/bin/env python3
"""Print the monomial support of [p](X) for the built-in curve at the
place (t), truncated at X^(p^2+1): in characteristic p only exponents
divisible by p survive.

Usage: python scripts/formal_group_support.py [primes...]
"""

import sys

from ffec.formal import formal_group_mult_by_p
from ffec.funcfield import Place
from ffec.gfpoly import Polynomial
from ffec.pipeline import reference_curve


def main() -> int:
    primes = [int(a) for a in sys.argv[1:]] or [2, 3, 5]
    for p in primes:
        series = formal_group_mult_by_p(reference_curve(p), Place.finite(Polynomial.t(p)), p * p + 1)
        print(f"p = {p}: [p](X) mod X^{p * p + 2}, coefficients mod t^{p * p + 2}")
        for k in series.support():
            print(f"  X^{k}: {series[k]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
