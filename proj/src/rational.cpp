#include "asai/rational.hpp"

#include <cctype>

namespace asai {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(ErrorKind::Schema, "empty rational literal");
    size_t slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den)) fail(ErrorKind::Schema, "malformed rational literal '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) fail(ErrorKind::Schema, "zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(inv(base), -e);
    Rational r(pow(Integer(base.get_num()), static_cast<unsigned long>(e)),
               pow(Integer(base.get_den()), static_cast<unsigned long>(e)));
    return r;
}

int valuation(const Integer& x, long p) {
    if (x == 0) return kInfiniteValuation;
    Integer t = x, P = p;
    int v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), P.get_mpz_t())) {
        t /= P;
        ++v;
    }
    return v;
}

int valuation(const Rational& x, long p) {
    if (sgn(x) == 0) return kInfiniteValuation;
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

bool is_square(const Rational& x, Rational* root) {
    if (sgn(x) < 0) return false;
    Integer n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    if (root) {
        Integer rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        *root = Rational(rn, rd);
    }
    return true;
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_pow(long base, long e, long m) {
    __int128 r = 1 % m, b = ((base % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<long>(r);
}

long euler_phi(long n) {
    long r = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        r -= r / d;
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace asai
