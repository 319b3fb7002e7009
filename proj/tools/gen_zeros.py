#!/usr/bin/env python3
"""Regenerate data/zeros_first.txt: ordinates of the first N nontrivial zeta zeros.

Output matches the Odlyzko table layout (one decimal per line, no header).
Usage: gen_zeros.py [N] > data/zeros_first.txt
"""
import sys

import mpmath


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 2500
    mpmath.mp.dps = 20
    for n in range(1, count + 1):
        sys.stdout.write(f"{float(mpmath.zetazero(n).imag):.9f}\n")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
