#include "asai/cyclotomic.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace asai {

namespace {

int mobius(long n) {
    int m = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

std::vector<Integer> poly_mul_xd_minus_1(const std::vector<Integer>& a, int d) {
    std::vector<Integer> r(a.size() + d, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        r[i + d] += a[i];
        r[i] -= a[i];
    }
    return r;
}

std::vector<Integer> poly_div_xd_minus_1(const std::vector<Integer>& a, int d) {
    std::vector<Integer> q(a.size() - d, Integer(0));
    for (size_t k = 0; k < q.size(); ++k) {
        Integer prev = k >= static_cast<size_t>(d) ? q[k - d] : Integer(0);
        q[k] = prev - a[k];
    }
    return q;
}

// Reduces a (any length) modulo the monic field polynomial; result has length phi.
template <class T>
std::vector<T> reduce(std::vector<T> a, const Cyclotomic::Field& f) {
    const int phi = f.phi;
    for (int i = static_cast<int>(a.size()) - 1; i >= phi; --i) {
        if (a[i] == 0) continue;
        T c = a[i];
        for (int j = 0; j < phi; ++j) {
            if (f.poly[j] == 0) continue;
            a[i - phi + j] -= c * f.poly[j];
        }
        a[i] = 0;
    }
    a.resize(phi, T(0));
    return a;
}

Integer denominator_lcm(const std::vector<Rational>& c) {
    Integer l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace

std::shared_ptr<const Cyclotomic::Field> Cyclotomic::field(int n) {
    if (n < 1) domain_error("cyclotomic order must be positive");
    auto f = std::make_shared<Field>();
    f->n = n;
    f->phi = static_cast<int>(euler_phi(n));
    std::vector<Integer> p{Integer(1)};
    std::vector<int> divide_by;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 1) p = poly_mul_xd_minus_1(p, d);
        if (mu == -1) divide_by.push_back(d);
    }
    for (int d : divide_by) p = poly_div_xd_minus_1(p, d);
    // For n = 1 the product is x - 1; otherwise the Mobius product is already monic.
    f->poly = p;
    return f;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0), 1) {}
Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value), 1) {}

Cyclotomic::Cyclotomic(const Rational& value, int n) : field_(field(n)), c_(field_->phi, Rational(0)) {
    c_[0] = value;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const Field> f, std::vector<Rational> c)
    : field_(std::move(f)), c_(std::move(c)) {}

Cyclotomic Cyclotomic::zeta(int n, long k) {
    auto f = field(n);
    std::vector<Rational> e(n, Rational(0));
    e[((k % n) + n) % n] = 1;
    return Cyclotomic(f, reduce(std::move(e), *f));
}

Cyclotomic Cyclotomic::from_exponents(int n, const std::vector<Rational>& c) {
    auto f = field(n);
    std::vector<Rational> e(n, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) e[i % n] += c[i];
    return Cyclotomic(f, reduce(std::move(e), *f));
}

Cyclotomic Cyclotomic::promote(int m) const {
    const int n = order();
    if (m == n) return *this;
    if (m % n) domain_error("cyclotomic promotion requires a multiple of the order");
    std::vector<Rational> e(m, Rational(0));
    for (int j = 0; j < degree(); ++j) e[static_cast<size_t>(j) * (m / n)] = c_[j];
    auto f = field(m);
    return Cyclotomic(f, reduce(std::move(e), *f));
}

Cyclotomic Cyclotomic::galois(long k) const {
    const int n = order();
    std::vector<Rational> e(n, Rational(0));
    long kk = ((k % n) + n) % n;
    if (n > 1 && gcd_long(kk, n) != 1) domain_error("galois exponent must be coprime to the order");
    for (int j = 0; j < degree(); ++j) e[(static_cast<long>(j) * kk) % n] += c_[j];
    return Cyclotomic(field_, reduce(std::move(e), *field_));
}

std::pair<Cyclotomic, Cyclotomic> Cyclotomic::align(const Cyclotomic& o) const {
    if (order() == o.order()) return {*this, o};
    int m = static_cast<int>(lcm_long(order(), o.order()));
    return {promote(m), o.promote(m)};
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order() != o.order()) {
        auto [a, b] = align(o);
        *this = a;
        return *this += b;
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (order() != o.order()) {
        auto [a, b] = align(o);
        *this = a;
        return *this -= b;
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (order() != o.order()) {
        auto [a, b] = align(o);
        *this = a;
        return *this *= b;
    }
    if (o.is_rational()) {
        const Rational& s = o.c_[0];
        for (auto& x : c_) x *= s;
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        c_ = o.c_;
        for (auto& x : c_) x *= s;
        return *this;
    }
    // Scale to integers, multiply, reduce, rescale.
    Integer la = denominator_lcm(c_), lb = denominator_lcm(o.c_);
    const int phi = degree();
    std::vector<Integer> a(phi), b(phi);
    for (int i = 0; i < phi; ++i) {
        a[i] = c_[i].get_num() * (la / c_[i].get_den());
        b[i] = o.c_[i].get_num() * (lb / o.c_[i].get_den());
    }
    std::vector<Integer> prod(2 * phi - 1, Integer(0));
    for (int i = 0; i < phi; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    auto r = reduce(std::move(prod), *field_);
    Integer scale = la * lb;
    for (int i = 0; i < phi; ++i) {
        c_[i] = Rational(r[i], scale);
        c_[i].canonicalize();
    }
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.c_ == b.c_;
    auto [x, y] = a.align(b);
    return x.c_ == y.c_;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) domain_error("division by zero");
    if (is_rational()) return Cyclotomic(field_, [&] {
            std::vector<Rational> c(degree(), Rational(0));
            c[0] = Rational(1) / c_[0];
            return c;
        }());
    // Solve (multiplication-by-this matrix) * y = e_0.
    const int phi = degree();
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
    Cyclotomic col = *this;
    Cyclotomic z = zeta(order());
    for (int j = 0; j < phi; ++j) {
        for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
        col *= z;
    }
    m[0][phi] = 1;
    for (int c = 0; c < phi; ++c) {
        int piv = c;
        while (piv < phi && sgn(m[piv][c]) == 0) ++piv;
        if (piv == phi) domain_error("division by zero");
        std::swap(m[piv], m[c]);
        Rational ip = Rational(1) / m[c][c];
        for (int k = c; k <= phi; ++k) m[c][k] *= ip;
        for (int r = 0; r < phi; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (int k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> y(phi);
    for (int i = 0; i < phi; ++i) y[i] = m[i][phi];
    return Cyclotomic(field_, std::move(y));
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> s = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int j = 0; j < degree(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        s += c_[j].get_d() * std::polar(1.0, two_pi * j / order());
    }
    return s;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < degree(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        Rational a = abs(c_[j]);
        bool neg = sgn(c_[j]) < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "zeta_" << order();
        if (j > 1) os << "^" << j;
    }
    return first ? "0" : os.str();
}

Cyclotomic sqrt_rational(const Rational& x) {
    if (sgn(x) == 0) return Cyclotomic();
    Integer nd = x.get_num() * x.get_den();
    Integer u = nd < 0 ? Integer(-1) : Integer(1);
    Integer rest = abs(nd), k = 1;
    for (long p = 2; rest > 1; ++p) {
        if (Integer(p) * p > rest) {
            u *= rest;
            break;
        }
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
            rest /= p * p;
            k *= p;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            u *= p;
        }
    }
    Cyclotomic root(make_rational(k, Integer(x.get_den())));
    if (u < 0) root *= Cyclotomic::zeta(4);
    Integer au = abs(u);
    for (long p = 2; au > 1; ++p) {
        if (!mpz_divisible_ui_p(au.get_mpz_t(), p)) continue;
        au /= p;
        if (p == 2) {
            root *= Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
            continue;
        }
        std::vector<Rational> e(p, Rational(0));
        for (long a = 1; a < p; ++a) e[a] = mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        Cyclotomic g = Cyclotomic::from_exponents(static_cast<int>(p), e);
        if (p % 4 == 3) g *= -Cyclotomic::zeta(4);
        root *= g;
    }
    return root;
}

}  // namespace asai
