#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "asai/rational.hpp"

namespace asai {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
uint64_t powmod(uint64_t base, uint64_t e, uint64_t m);
// Inverse of a unit modulo m (extended Euclid).
uint64_t invmod(uint64_t a, uint64_t m);
uint64_t ipow(uint64_t base, int e);

// Residue modulo p^M.
class PAdicInt {
public:
    PAdicInt(long p, int M, uint64_t residue = 0);
    static PAdicInt from_integer(const Integer& x, long p, int M);
    // x must be p-integral.
    static PAdicInt from_rational(const Rational& x, long p, int M);

    long prime() const { return p_; }
    int precision() const { return M_; }
    uint64_t modulus() const { return mod_; }
    uint64_t residue() const { return r_; }

    // nullopt means the residue is zero, i.e. valuation >= M.
    std::optional<int> valuation() const;
    std::string valuation_str() const;
    bool is_unit() const { return r_ % p_ != 0; }

    PAdicInt inverse() const;
    PAdicInt pow(long e) const;
    std::string str() const { return std::to_string(r_); }

    friend PAdicInt operator+(const PAdicInt& a, const PAdicInt& b);
    friend PAdicInt operator-(const PAdicInt& a, const PAdicInt& b);
    friend PAdicInt operator*(const PAdicInt& a, const PAdicInt& b);
    PAdicInt operator-() const;
    friend bool operator==(const PAdicInt& a, const PAdicInt& b) {
        return a.p_ == b.p_ && a.M_ == b.M_ && a.r_ == b.r_;
    }
    friend bool operator!=(const PAdicInt& a, const PAdicInt& b) { return !(a == b); }

private:
    void check(const PAdicInt& o) const;
    long p_;
    int M_;
    uint64_t mod_;
    uint64_t r_;
};

PAdicInt padic_sqrt(const Integer& a, long p, int M);

}  // namespace asai
