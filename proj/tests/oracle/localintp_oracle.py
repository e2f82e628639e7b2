#!/usr/bin/env python3
"""Brute-force numeric oracle for the split local integral at p with trivial nu.

Whittaker functions are evaluated with the genuine additive character (complex roots of unity), the
left unit average is taken over (Z/p^3)^x, and the integral over K is a sum over GL2(Z/p^2) with the
Schwartz function weights. Nothing is shared with the exact engine except the spherical formula on the torus.
Prints values that are frozen into tests/test_local_zeta.cpp.
"""
import cmath
import itertools
from fractions import Fraction as F

p = 3
A, B, C, D = F(2), F(3, 2), F(1, 2), F(4, 3)
sq = p ** 0.5
al, be, ga, de = float(A) / sq, float(B) / sq, float(C) / sq, float(D) / sq


def v(x):
    x = F(x)
    if x == 0:
        return 10 ** 9
    n, d, k = x.numerator, x.denominator, 0
    while n % p == 0:
        n //= p
        k += 1
    while d % p == 0:
        d //= p
        k -= 1
    return k


def psi(x):
    x = F(x)
    if v(x) >= 0:
        return 1
    k = -v(x)
    m = x.denominator // p ** k
    r = (x.numerator * pow(m, -1, p ** k)) % p ** k
    return cmath.exp(2j * cmath.pi * r / p ** k)


def h(m, x, y):
    return sum(x ** i * y ** (m - i) for i in range(m + 1)) if m >= 0 else 0


def mul(g, k):
    (a1, b1), (c1, d1) = g
    (a2, b2), (c2, d2) = k
    return ((a1 * a2 + b1 * c2, a1 * b2 + b1 * d2), (c1 * a2 + d1 * c2, c1 * b2 + d1 * d2))


def wsph(g, x1, x2):
    (a, b), (c, d) = g
    det = a * d - b * c
    if v(c) >= v(d):
        y1, y2, x = det / d, d, b / d
    else:
        y1, y2, x = -det / c, c, a / c
    m = v(y1) - v(y2)
    if m < 0:
        return 0
    return psi(x) * (x1 * x2) ** v(y2) * p ** (-m / 2) * h(m, x1, x2)


def M(a, b, c, d):
    return ((F(a), F(b)), (F(c), F(d)))


t = M(1, 0, 0, p)
W1 = [(1 / (sq * al), mul(M(1, p * c, 0, p), t)) for c in range(p)] + [(-be / al, t)]
units = [u for u in range(1, p ** 3) if u % p]


def w1(g):
    return sum(co * wsph(mul(g, k), al, be) for co, k in W1)


def w1avg(g):
    return sum(w1(mul(M(u, 0, 0, 1), g)) for u in units) / len(units)


def series(n_max):
    w = M(0, -1, 1, 0)
    return [p ** n * w1avg(mul(M(p ** n, 0, 0, 1), w)).real for n in range(n_max + 1)]


def z_coeffs(mrange):
    chi = al * be * ga * de
    reps = [M(a, b, c, d) for a, b, c, d in itertools.product(range(p * p), repeat=4) if (a * d - b * c) % p]
    out = {}
    sign = M(-1, 0, 0, 1)
    for k in reps:
        vc = v(k[1][0])
        if vc == 0:
            weight, shift = 1 - 1 / p, 0
        elif vc == 1:
            weight, shift = -1 / p / chi, -2
        else:
            continue
        for m in mrange:
            acc = 0
            for u in units:
                g = mul(M(F(p) ** m * u, 0, 0, 1), k)
                w2 = wsph(g, ga, de)
                if w2:
                    acc += w1(mul(sign, g)) * w2
            acc /= len(units)
            out[m + shift] = out.get(m + shift, 0) + acc * weight * p ** m / len(reps)
    return out


def nearest(x):
    return F(x).limit_denominator(100000)


if __name__ == "__main__":
    s = series(6)
    print("V_n:", [str(nearest(x)) for x in s])
    z = z_coeffs(range(0, 4))
    print("Z:", {m: str(nearest(z[m].real)) for m in sorted(z) if -2 <= m <= 1})
