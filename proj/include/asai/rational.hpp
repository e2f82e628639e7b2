#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <string_view>

#include "asai/error.hpp"

namespace asai {

using Integer = mpz_class;
using Rational = mpq_class;

// Valuation of zero is reported as this sentinel.
inline constexpr int kInfiniteValuation = INT_MAX;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) domain_error("division by zero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Rational pow(const Rational& base, long e);
Integer pow(const Integer& base, unsigned long e);
int valuation(const Rational& x, long p);
int valuation(const Integer& x, long p);
bool is_square(const Rational& x, Rational* root = nullptr);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inv(const Rational& x) {
    if (sgn(x) == 0) domain_error("division by zero");
    return Rational(1) / x;
}
inline std::string str(const Rational& x) { return to_string(x); }

long gcd_long(long a, long b);
long lcm_long(long a, long b);
bool is_prime(long n);
long mod_pow(long base, long e, long m);
long euler_phi(long n);

}  // namespace asai
