#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "asai/rational.hpp"

namespace asai {

// Power basis of Q(zeta_n) reduced modulo the n-th cyclotomic polynomial.
class Cyclotomic {
public:
    struct Field {
        int n = 1;
        int phi = 1;
        std::vector<Integer> poly;  // monic, degree phi, low order first
    };

    Cyclotomic();
    Cyclotomic(long value);
    Cyclotomic(const Rational& value, int n = 1);

    static Cyclotomic zeta(int n, long k = 1);
    // Reduces sum_e c[e] zeta_n^e for a vector of length n.
    static Cyclotomic from_exponents(int n, const std::vector<Rational>& c);
    static std::shared_ptr<const Field> field(int n);

    int order() const { return field_->n; }
    int degree() const { return field_->phi; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclotomic promote(int m) const;
    Cyclotomic conj() const { return galois(-1); }
    Cyclotomic galois(long k) const;
    Cyclotomic inverse() const;

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return c_[0]; }
    std::complex<double> embed() const;
    std::string str() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic operator-() const;
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    Cyclotomic(std::shared_ptr<const Field> f, std::vector<Rational> c);
    std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& o) const;

    std::shared_ptr<const Field> field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }
inline std::string str(const Cyclotomic& x) { return x.str(); }

// Square root of a rational inside a cyclotomic field, built from quadratic Gauss sums.
Cyclotomic sqrt_rational(const Rational& x);

}  // namespace asai
