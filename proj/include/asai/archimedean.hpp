#pragma once

#include <complex>
#include <string>

#include "asai/rational.hpp"

namespace asai {

// r * i^a * sqrt(D)^b * pi^{-c}, with a, b in {0, 1}.
struct ClosedForm {
    Rational r = 0;
    int i_power = 0;
    int sqrtD_power = 0;
    int pi_power = 0;  // c
    long D = 1;

    std::complex<double> numeric() const;
    std::string str() const;
    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

// Normalizes r * i^a * sqrt(D)^b * pi^{-c} for arbitrary integers a, b.
ClosedForm make_closed_form(Rational r, int a, int b, int c, long D);

// Gamma_C(n) = 2 (2 pi)^{-n} (n-1)! for a positive integer n.
ClosedForm gamma_c(int n);

ClosedForm operator*(const ClosedForm& x, const ClosedForm& y);

// i^{k1-k2} 2^{-k1} sqrt(D)^w Gamma_C(w) Gamma_C(s + (k1-k2)/2), w = s - 1 + (k1+k2)/2.
ClosedForm archimedean_factor(int k1, int k2, long D, int s);

// Gamma(s + (k1+k2-2)/2) Gamma(s + (k1-k2)/2) / (2^{k1-2} i^{1-k2} (-2 pi i)^{2s+k1-1}).
ClosedForm interpolation_gamma_quotient(int k1, int k2, int s);

struct QuadratureCheck {
    double closed = 0, quadrature = 0, relative_error = 0;
};

// Adaptive quadrature of f^{Phi_inf}(1; 1, s) * int_0^inf y^{(k1+k2)/2} e^{-4 pi y / sqrt D} y^{s-1} d^x y.
QuadratureCheck archimedean_quadrature(int k1, int k2, long D, int s);

}  // namespace asai
