#!/usr/bin/env python3
"""Regenerate the vendored b-file fixtures.

Standalone on purpose: this script shares no code with the seqinv package
(plain-Python quadratic recurrence, no numpy, no convolution), so the
fixtures form an independent oracle for the comparison tests.  When network
access to oeis.org is available, prefer `seqinv oeis --fetch` and diff.

Usage: python tools/make_bfile_fixtures.py [count] [outdir]
"""

import sys
from pathlib import Path


def inverse_digit_sum_sequence(p, count):
    """First `count` terms of the compositional inverse of the base-p
    digit-sum series, via the joint s/w convolution recurrence."""
    n = count + 1
    s = [0] * (n + 1)
    w = [0] * (n + 1)
    s[1] = 1
    w[0] = (-1) % p
    w[1] = (-1) % p
    for m in range(2, n + 1):
        acc = 0
        for k in range(1, m):
            acc += s[k] * w[m - k]
        s[m] = acc % p
        wm = -s[m]
        if m % p == 0:
            wm += s[m // p]
        w[m] = wm % p
    c = [0] * count
    if count > 1:
        c[1] = 1
    for m in range(2, count):
        c[m] = (-s[m + 1]) % p
    return c


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 10_000
    outdir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    outdir.mkdir(parents=True, exist_ok=True)
    for aid, p in (("053838", 3), ("053840", 5)):
        values = inverse_digit_sum_sequence(p, count)
        path = outdir / f"b{aid}.txt"
        with open(path, "w") as fh:
            fh.write(f"# b-file for A{aid}, generated offline by tools/make_bfile_fixtures.py\n")
            for n, v in enumerate(values):
                fh.write(f"{n} {v}\n")
        print(f"wrote {path} ({count} terms)")


if __name__ == "__main__":
    main()
