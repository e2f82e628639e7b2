# Independent oracle for values frozen into test_foundations.cpp / test_hilbert.cpp.
from fractions import Fraction
import cmath, itertools, sympy


def sqrt_mod_prime_power(a, p, M):
    # brute force over residues, keep the root whose residue mod p is <= (p-1)/2
    mod = p ** M
    roots = [r for r in range(mod) if (r * r - a) % mod == 0]
    return min(roots, key=lambda r: (r % p > (p - 1) // 2, r))


def unit_root(a, chi, p, k, M):
    mod = p ** M
    roots = [r for r in range(mod) if (r * r - a * r + chi * p ** (k - 1)) % mod == 0 and r % p]
    return roots


def series(num, den, n):
    out = []
    for k in range(n):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / den[0])
    return out


if __name__ == "__main__":
    print("sqrt(5) mod 11^3:", sqrt_mod_prime_power(5, 11, 3))
    print("sqrt(6) mod 5^4:", sqrt_mod_prime_power(6, 5, 4))
    print("unit root X^2-3X+5 mod 5^4:", unit_root(3, 1, 5, 2, 4))
    print("unit root X^2-6X+5 mod 5^3:", unit_root(6, 1, 5, 2, 3))
    den = [1, -5, 6]
    print("1/((1-2X)(1-3X)):", series([1], den, 5))
    x = sympy.symbols('x')
    for n in (5, 12, 10, 9, 8):
        print("Phi_%d" % n, sympy.Poly(sympy.cyclotomic_poly(n, x)).all_coeffs()[::-1])
