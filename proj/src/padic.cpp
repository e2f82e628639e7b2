#include "asai/padic.hpp"

namespace asai {

uint64_t powmod(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) domain_error("unit required");
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

uint64_t ipow(uint64_t base, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > UINT64_MAX / base) domain_error("precision too large");
        r *= base;
    }
    return r;
}

PAdicInt::PAdicInt(long p, int M, uint64_t residue) : p_(p), M_(M) {
    if (p < 2 || M < 1) domain_error("invalid p-adic parameters");
    mod_ = ipow(static_cast<uint64_t>(p), M);
    if (mod_ >= (uint64_t(1) << 62)) domain_error("precision too large");
    r_ = residue % mod_;
}

PAdicInt PAdicInt::from_integer(const Integer& x, long p, int M) {
    PAdicInt t(p, M);
    Integer r = x % Integer(std::to_string(t.mod_));
    if (r < 0) r += Integer(std::to_string(t.mod_));
    t.r_ = std::stoull(r.get_str());
    return t;
}

PAdicInt PAdicInt::from_rational(const Rational& x, long p, int M) {
    if (asai::valuation(Integer(x.get_den()), p) > 0) domain_error("rational is not p-integral");
    PAdicInt n = from_integer(x.get_num(), p, M);
    PAdicInt d = from_integer(x.get_den(), p, M);
    return n * d.inverse();
}

std::optional<int> PAdicInt::valuation() const {
    if (r_ == 0) return std::nullopt;
    uint64_t r = r_;
    int v = 0;
    while (r % p_ == 0) {
        r /= p_;
        ++v;
    }
    return v;
}

std::string PAdicInt::valuation_str() const {
    auto v = valuation();
    return v ? std::to_string(*v) : ">= " + std::to_string(M_);
}

void PAdicInt::check(const PAdicInt& o) const {
    if (p_ != o.p_ || M_ != o.M_) domain_error("mismatched p-adic parameters");
}

PAdicInt operator+(const PAdicInt& a, const PAdicInt& b) {
    a.check(b);
    return PAdicInt(a.p_, a.M_, (a.r_ + b.r_) % a.mod_);
}

PAdicInt operator-(const PAdicInt& a, const PAdicInt& b) {
    a.check(b);
    return PAdicInt(a.p_, a.M_, (a.r_ + a.mod_ - b.r_) % a.mod_);
}

PAdicInt operator*(const PAdicInt& a, const PAdicInt& b) {
    a.check(b);
    return PAdicInt(a.p_, a.M_, mulmod(a.r_, b.r_, a.mod_));
}

PAdicInt PAdicInt::operator-() const { return PAdicInt(p_, M_, (mod_ - r_) % mod_); }

PAdicInt PAdicInt::inverse() const {
    if (!is_unit()) domain_error("unit required");
    return PAdicInt(p_, M_, invmod(r_, mod_));
}

PAdicInt PAdicInt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return PAdicInt(p_, M_, powmod(r_, static_cast<uint64_t>(e), mod_));
}

PAdicInt padic_sqrt(const Integer& a, long p, int M) {
    if (p < 3 || !is_prime(p)) domain_error("odd prime required");
    PAdicInt x = PAdicInt::from_integer(a, p, M);
    if (x.residue() % p == 0) domain_error("unit required");
    long a0 = static_cast<long>(x.residue() % p);
    long root = -1;
    for (long r = 1; r <= (p - 1) / 2; ++r)
        if (r * r % p == a0) {
            root = r;
            break;
        }
    if (root < 0) domain_error("no square root");
    // Newton step r <- r - (r^2 - a)/(2r), which doubles the precision each time.
    PAdicInt r(p, M, static_cast<uint64_t>(root));
    PAdicInt two(p, M, 2);
    for (int prec = 1; prec < M; prec *= 2) r = r - (r * r - x) * (two * r).inverse();
    return r;
}

}  // namespace asai
