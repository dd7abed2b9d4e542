#!/usr/bin/env python3
"""Pre-build oracle for the shift-ratio trend experiment.

Scan u,v over S-units for S = {inf,2,3}, exponent bound 12, both signs.
ratio = h((u-1)/(v-1)) / h(1:u:v).
Dependence for u = su*2^a*3^b, v = sv*2^c*3^d:  dependent iff a*d - b*c == 0.
For H0 in {10,20,30}: min ratio over independent pairs with h(1:u:v) >= H0.
Also: sporadic list = independent pairs with ratio < 1/2 and h(1:u:v) >= 20.
"""
from fractions import Fraction
from math import gcd, log

B = 12

def lcm(a, b):
    return a // gcd(a, b) * b

def h_1uv(u, v):
    L = lcm(u.denominator, v.denominator)
    xs = (L, u.numerator * (L // u.denominator), v.numerator * (L // v.denominator))
    g = 0
    for x in xs:
        g = gcd(g, abs(x))
    return max(abs(x) for x in xs) // g

def main():
    units = []  # (value, a, b)
    for a in range(-B, B + 1):
        for b in range(-B, B + 1):
            val = Fraction(2)**a * Fraction(3)**b
            units.append((val, a, b))
            units.append((-val, a, b))
    print(f"unit count: {len(units)}")

    thresholds = [10.0, 20.0, 30.0]
    best = {t: None for t in thresholds}   # (ratio, u, v, H1, H2)
    sporadic = []
    nrows = 0
    for (u, a, b) in units:
        if u == 1:
            continue
        for (v, c, d) in units:
            if v == 1:
                continue
            nrows += 1
            x = (u - 1) / (v - 1)
            H1 = max(abs(x.numerator), x.denominator)
            H2 = h_1uv(u, v)
            hh2 = log(H2)
            if hh2 == 0.0:
                continue  # H2 == 1 impossible here unless u=v=+-1 cases
            ratio = log(H1) / hh2
            dep = (a * d - b * c == 0)
            if dep:
                continue
            if ratio < 0.5 and hh2 >= 20.0:
                sporadic.append((str(u), str(v), H1, H2, ratio))
            for t in thresholds:
                if hh2 >= t:
                    cur = best[t]
                    if cur is None or ratio < cur[0] - 1e-15:
                        best[t] = (ratio, str(u), str(v), H1, H2)
    print(f"rows scanned: {nrows}")
    for t in thresholds:
        r = best[t]
        print(f"H0={t}: min_ratio={r[0]:.17g} at u={r[1]} v={r[2]} H1={r[3]} H2={r[4]}")
    print(f"sporadic (independent, ratio<1/2, h>=20): {len(sporadic)}")
    for s in sporadic[:50]:
        print("  ", s)

if __name__ == "__main__":
    main()
