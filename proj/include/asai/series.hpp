#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "asai/cyclotomic.hpp"
#include "asai/mpoly.hpp"
#include "asai/rational.hpp"

namespace asai {

template <class R>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(R constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    // 1 - a X^k
    static Polynomial one_minus(const R& a, int k = 1) {
        std::vector<R> c(k + 1, R(0));
        c[0] = R(1);
        c[k] = R(0) - a;
        return Polynomial(std::move(c));
    }
    static Polynomial monomial(const R& a, int k) {
        std::vector<R> c(k + 1, R(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    R coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R(0); }
    const std::vector<R>& coeffs() const { return c_; }

    // X -> -X
    Polynomial negate_var() const {
        auto c = c_;
        for (size_t i = 1; i < c.size(); i += 2) c[i] = R(0) - c[i];
        return Polynomial(std::move(c));
    }
    // Keeps coefficients of degree k*j and reindexes them to j.
    Polynomial decimate(int k) const {
        std::vector<R> c;
        for (size_t i = 0; i < c_.size(); i += k) c.push_back(c_[i]);
        return Polynomial(std::move(c));
    }
    // X -> X^k
    Polynomial inflate(int k) const {
        if (c_.empty()) return {};
        std::vector<R> c((c_.size() - 1) * k + 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return Polynomial(std::move(c));
    }
    Polynomial scale(const R& a) const {
        std::vector<R> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(x * a);
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (is_zero(b.c_[j])) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "X") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << asai::str(c_[i]) << ")";
            if (i == 1) os << "*" << var;
            if (i > 1) os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

// Truncated power series: coefficients c_0..c_{T-1}, T the truncation order.
template <class R>
class FormalSeries {
public:
    FormalSeries() = default;
    FormalSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {}
    static FormalSeries from_polynomial(const Polynomial<R>& p, int order) {
        std::vector<R> c(order, R(0));
        for (int i = 0; i < order; ++i) c[i] = p.coeff(i);
        return FormalSeries(std::move(c));
    }
    static FormalSeries constant(const R& a, int order) {
        std::vector<R> c(order, R(0));
        if (order > 0) c[0] = a;
        return FormalSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()); }
    const R& operator[](int i) const { return c_[i]; }
    const std::vector<R>& coeffs() const { return c_; }
    FormalSeries truncate(int order) const {
        std::vector<R> c(c_.begin(), c_.begin() + std::min(order, this->order()));
        return FormalSeries(std::move(c));
    }

    FormalSeries& operator+=(const FormalSeries& o) {
        c_.resize(std::min(order(), o.order()));
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    FormalSeries& operator-=(const FormalSeries& o) {
        c_.resize(std::min(order(), o.order()));
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        int n = std::min(a.order(), b.order());
        std::vector<R> c(n, R(0));
        for (int i = 0; i < n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < n; ++j) {
                if (is_zero(b.c_[j])) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return FormalSeries(std::move(c));
    }
    FormalSeries inverse() const {
        int n = order();
        if (n == 0) return {};
        R u = inv(c_[0]);
        std::vector<R> c(n, R(0));
        c[0] = u;
        for (int k = 1; k < n; ++k) {
            R acc(0);
            for (int i = 1; i <= k; ++i)
                if (!is_zero(c_[i])) acc += c_[i] * c[k - i];
            c[k] = R(0) - acc * u;
        }
        return FormalSeries(std::move(c));
    }
    friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }

private:
    std::vector<R> c_;
};

template <class R>
class RationalFunction {
public:
    RationalFunction() : num_(R(1)), den_(R(1)) {}
    RationalFunction(Polynomial<R> num) : num_(std::move(num)), den_(R(1)) {}
    RationalFunction(Polynomial<R> num, Polynomial<R> den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    // 1 / (1 - a X^k)
    static RationalFunction geometric(const R& a, int k = 1) {
        return RationalFunction(Polynomial<R>(R(1)), Polynomial<R>::one_minus(a, k));
    }

    const Polynomial<R>& num() const { return num_; }
    const Polynomial<R>& den() const { return den_; }
    bool expandable() const {
        if (den_.is_zero_poly() || is_zero(den_.coeff(0))) return false;
        try {
            (void)inv(den_.coeff(0));
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    RationalFunction inverse() const { return RationalFunction(den_, num_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    // Equality as elements of the fraction field.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str(const std::string& var = "X") const {
        return "[" + num_.str(var) + "] / [" + den_.str(var) + "]";
    }

private:
    void canonicalize() {
        if (!expandable()) return;
        R c0 = den_.coeff(0);
        if (c0 == R(1)) return;
        R u = inv(c0);
        num_ = num_.scale(u);
        den_ = den_.scale(u);
    }
    Polynomial<R> num_;
    Polynomial<R> den_;
};

template <class R>
FormalSeries<R> expand_rational_function(const RationalFunction<R>& rf, int order) {
    if (order < 0) domain_error("negative truncation order");
    if (!rf.expandable()) domain_error("not expandable");
    const auto& num = rf.num();
    const auto& den = rf.den();
    R u = inv(den.coeff(0));
    std::vector<R> c(order, R(0));
    int dd = den.degree();
    for (int n = 0; n < order; ++n) {
        R acc = num.coeff(n);
        for (int i = 1; i <= std::min(n, dd); ++i) {
            const R& di = den.coeffs()[i];
            if (is_zero(di) || is_zero(c[n - i])) continue;
            acc -= di * c[n - i];
        }
        if (u == R(1)) c[n] = acc;
        else c[n] = acc * u;
    }
    return FormalSeries<R>(std::move(c));
}

// Complete homogeneous symmetric polynomials h_0..h_{n-1} of a multiset.
template <class R>
std::vector<R> complete_homogeneous(const std::vector<R>& roots, int n) {
    std::vector<R> h(n, R(0));
    if (n > 0) h[0] = R(1);
    for (const auto& a : roots) {
        for (int k = 1; k < n; ++k) h[k] += a * h[k - 1];
    }
    return h;
}

// prod_{a in roots} (1 - a Y)
template <class R>
Polynomial<R> characteristic_polynomial(const std::vector<R>& roots) {
    Polynomial<R> p(R(1));
    for (const auto& a : roots) p = p * Polynomial<R>::one_minus(a);
    return p;
}

// Power sums p_1..p_n of the reciprocal roots of P (P(0) = 1), via Newton's identities.
template <class R>
std::vector<R> power_sums(const Polynomial<R>& P, int n) {
    // P = 1 + c1 Y + ... ; e_k = (-1)^k c_k
    int d = P.degree();
    std::vector<R> e(d + 1, R(0));
    for (int k = 0; k <= d; ++k) e[k] = (k % 2 == 0) ? P.coeff(k) : R(R(0) - P.coeff(k));
    std::vector<R> p(n + 1, R(0));
    for (int k = 1; k <= n; ++k) {
        R acc(0);
        for (int i = 1; i < k && i <= d; ++i) {
            R t = e[i] * p[k - i];
            if (i % 2 == 1) acc += t;
            else acc -= t;
        }
        if (k <= d) {
            R t = e[k] * R(Rational(k));
            if (k % 2 == 1) acc += t;
            else acc -= t;
        }
        p[k] = acc;
    }
    return p;
}

// Polynomial 1 - e1 Y + e2 Y^2 - ... of degree d from power sums p_1..p_d.
template <class R>
Polynomial<R> polynomial_from_power_sums(const std::vector<R>& p, int d) {
    std::vector<R> e(d + 1, R(0));
    e[0] = R(1);
    for (int k = 1; k <= d; ++k) {
        R acc(0);
        for (int i = 1; i <= k; ++i) {
            R t = e[k - i] * p[i];
            if (i % 2 == 1) acc += t;
            else acc -= t;
        }
        e[k] = acc * Rational(1, k);
    }
    std::vector<R> c(d + 1, R(0));
    for (int k = 0; k <= d; ++k) c[k] = (k % 2 == 0) ? e[k] : R(R(0) - e[k]);
    return Polynomial<R>(std::move(c));
}

// prod_{a,b} (1 - a b Y) from P1 = prod(1 - a Y), P2 = prod(1 - b Y).
template <class R>
Polynomial<R> tensor_polynomial(const Polynomial<R>& P1, const Polynomial<R>& P2) {
    int d = P1.degree() * P2.degree();
    if (d <= 0) return Polynomial<R>(R(1));
    auto s1 = power_sums(P1, d);
    auto s2 = power_sums(P2, d);
    std::vector<R> s(d + 1, R(0));
    for (int k = 1; k <= d; ++k) s[k] = s1[k] * s2[k];
    return polynomial_from_power_sums(s, d);
}

// prod_a (1 - a^e Y) from P = prod(1 - a Y).
template <class R>
Polynomial<R> adams_polynomial(const Polynomial<R>& P, int e) {
    int d = P.degree();
    if (d <= 0) return Polynomial<R>(R(1));
    if (e == 1) return P;
    auto s = power_sums(P, d * e);
    std::vector<R> t(d + 1, R(0));
    for (int k = 1; k <= d; ++k) t[k] = s[k * e];
    return polynomial_from_power_sums(t, d);
}

template <class R>
std::string series_str(const FormalSeries<R>& s) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < s.order(); ++i) os << (i ? ", " : "") << asai::str(s[i]);
    os << "]";
    return os.str();
}

}  // namespace asai
