#!/usr/bin/env python3
"""Generate frozen high-precision oracle values for the test suite.

Direct series summation of the Mittag-Leffler / Wright / generalized Wright
functions at 50-digit working precision (mpmath). The emitted JSON fixture is
committed; re-run this script only to regenerate it.

Usage: python3 tools/gen_oracle_values.py > crates/fracsolve/tests/fixtures/series_oracle.json
"""

import json
import random

import mpmath as mp

mp.mp.dps = 60


def gen_wright(upper, lower, z, max_terms=4000):
    """Direct summation of  Σ Π Γ(A+αk) / Π Γ(B+βk) · z^k / k!."""
    s = mp.mpf(0)
    zc = mp.mpf(z)
    for k in range(max_terms):
        num = mp.mpf(1)
        den = mp.mpf(1)
        skip = False
        for (a, st) in upper:
            num *= mp.gamma(a + st * k)
        for (b, st) in lower:
            arg = mp.mpf(b) + mp.mpf(st) * k
            if arg <= 0 and abs(arg - mp.nint(arg)) < mp.mpf("1e-40"):
                skip = True
                break
            den *= mp.gamma(arg)
        if skip:
            continue
        term = num / den * zc ** k / mp.factorial(k)
        s += term
        if k > 8 and abs(term) < abs(s) * mp.mpf("1e-55"):
            break
    return s


def mittag_leffler(alpha, beta, z):
    return gen_wright([(1, 1)], [(beta, alpha)], z)


def wright(z, alpha, beta):
    return gen_wright([], [(beta, alpha)], z)


def fmt(x):
    return mp.nstr(x, 30)


out = {"named": {}, "gen_wright_random": []}

# Hand-picked values asserted directly in unit tests.
out["named"]["ml_half_one_at_1"] = fmt(mittag_leffler(mp.mpf("0.5"), 1, 1))
out["named"]["wright_m1_mhalf_half"] = fmt(wright(-1, mp.mpf("-0.5"), mp.mpf("0.5")))
out["named"]["wright_m1_mhalf_one"] = fmt(wright(-1, mp.mpf("-0.5"), 1))

# A 3Ψ1 instance with the row shape produced by a second-order Cauchy-Euler
# right-hand side: alpha=2.5, coefficients (-0.5, -0.4, 0.8), k=1.
alpha = mp.mpf("2.5")
a, b, c = mp.mpf("-0.5"), mp.mpf("-0.4"), mp.mpf("0.8")
D = 1 / alpha**2 - 2 * b / (alpha * c) + b**2 / c**2 - 4 * a / c
s1 = (1 / alpha - b / c + mp.sqrt(D)) / 2
s2 = (1 / alpha - b / c - mp.sqrt(D)) / 2
k = 1
rows_u = [(1 - k / alpha - s1, 1), (1 - k / alpha - s2, 1), (1, 1)]
rows_l = [(1 + alpha - k, alpha)]
z0 = mp.mpf("1.2")
out["named"]["psi31_sample"] = {
    "upper": [[fmt(r[0]), fmt(r[1])] for r in rows_u],
    "lower": [[fmt(r[0]), fmt(r[1])] for r in rows_l],
    "z": fmt(c * z0**alpha),
    "value": fmt(gen_wright(rows_u, rows_l, c * z0**alpha)),
}

# 20 random convergent descriptors, seeded for reproducibility.
rng = random.Random(42)
while len(out["gen_wright_random"]) < 20:
    p = rng.randint(1, 3)
    q = rng.randint(1, 2)
    upper = [
        (mp.mpf(f"{rng.uniform(0.3, 3.0):.6f}"), mp.mpf(f"{rng.uniform(0.2, 1.2):.6f}"))
        for _ in range(p)
    ]
    lower = [
        (mp.mpf(f"{rng.uniform(0.3, 3.0):.6f}"), mp.mpf(f"{rng.uniform(0.3, 2.0):.6f}"))
        for _ in range(q)
    ]
    delta = sum(r[1] for r in lower) - sum(r[1] for r in upper)
    if delta <= mp.mpf("-0.5"):
        continue
    z = mp.mpf(f"{rng.uniform(-2.5, 2.5):.6f}")
    if abs(z) < mp.mpf("0.1"):
        continue
    val = gen_wright(upper, lower, z)
    if not mp.isfinite(val) or abs(val) > mp.mpf("1e12"):
        continue
    out["gen_wright_random"].append(
        {
            "upper": [[fmt(r[0]), fmt(r[1])] for r in upper],
            "lower": [[fmt(r[0]), fmt(r[1])] for r in lower],
            "z": fmt(z),
            "value": fmt(val),
        }
    )

print(json.dumps(out, indent=1))
