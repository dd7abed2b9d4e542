#!/usr/bin/env python3
"""Pre-build oracle for the gcd-growth table.

Writes the expected CSV for the pair (a, b) = (2, 3), n = 1..60: columns
n, gcd, log_gcd_over_n with gcd = gcd(a^n - 1, b^n - 1) computed on big
integers, the log column printed with 17 significant digits, CRLF record
ends, and a mandatory header row.
"""
from math import gcd, log

A, B, N_MAX = 2, 3, 60


def main():
    with open("gcd_growth_2_3_60.csv", "wb") as f:
        f.write(b"n,gcd,log_gcd_over_n\r\n")
        for n in range(1, N_MAX + 1):
            g = gcd(A**n - 1, B**n - 1)
            line = f"{n},{g},{log(g) / n:.17g}\r\n"
            f.write(line.encode("ascii"))


if __name__ == "__main__":
    main()
