#include "asai/archimedean.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <sstream>

#include "asai/local_zeta.hpp"

namespace asai {

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct Integrand {
    double exponent;  // integrate t^{exponent - 1} g(t) dt
    double rate;
    bool gaussian;
};

double eval_integrand(double t, void* params) {
    auto* p = static_cast<Integrand*>(params);
    if (t <= 0) return 0;
    double g = p->gaussian ? std::exp(-p->rate * t * t) : std::exp(-p->rate * t);
    return std::pow(t, p->exponent - 1) * g;
}

double integrate_half_line(Integrand in) {
    gsl_set_error_handler_off();
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(2000);
    gsl_function f{&eval_integrand, &in};
    double result = 0, err = 0;
    int status = gsl_integration_qagiu(&f, 0.0, 0.0, 1e-13, 2000, ws, &result, &err);
    gsl_integration_workspace_free(ws);
    if (status != 0) domain_error(std::string("quadrature failed: ") + gsl_strerror(status));
    return result;
}

}  // namespace

ClosedForm make_closed_form(Rational r, int a, int b, int c, long D) {
    a = ((a % 4) + 4) % 4;
    if (a >= 2) {
        r = -r;
        a -= 2;
    }
    // sqrt(D)^b = D^{floor(b/2)} sqrt(D)^{b mod 2}
    int q = b >= 0 ? b / 2 : -((-b + 1) / 2);
    int rem = b - 2 * q;
    r *= pow(Rational(D), q);
    ClosedForm f;
    f.r = r;
    f.i_power = sgn(r) == 0 ? 0 : a;
    f.sqrtD_power = sgn(r) == 0 ? 0 : rem;
    f.pi_power = sgn(r) == 0 ? 0 : c;
    f.D = D;
    return f;
}

ClosedForm gamma_c(int n) {
    if (n < 1) domain_error("outside factorable range");
    Rational r = Rational(2) * pow(Rational(2), -n) * Rational(factorial(n - 1));
    return make_closed_form(r, 0, 0, n, 1);
}

ClosedForm operator*(const ClosedForm& x, const ClosedForm& y) {
    long D = x.sqrtD_power ? x.D : y.D;
    if (x.sqrtD_power && y.sqrtD_power && x.D != y.D) domain_error("mismatched discriminants");
    return make_closed_form(x.r * y.r, x.i_power + y.i_power, x.sqrtD_power + y.sqrtD_power,
                            x.pi_power + y.pi_power, D);
}

std::complex<double> ClosedForm::numeric() const {
    const double pi = std::acos(-1.0);
    double m = r.get_d() * std::pow(std::sqrt(static_cast<double>(D)), sqrtD_power) * std::pow(pi, -pi_power);
    return i_power ? std::complex<double>(0, m) : std::complex<double>(m, 0);
}

std::string ClosedForm::str() const {
    std::ostringstream os;
    os << r.get_str();
    if (i_power) os << "*i";
    if (sqrtD_power) os << "*sqrt(" << D << ")";
    if (pi_power) os << "*pi^(" << -pi_power << ")";
    return os.str();
}

ClosedForm archimedean_factor(int k1, int k2, long D, int s) {
    if ((k1 - k2) % 2 != 0) domain_error("non-paritious weight");
    int w = s - 1 + (k1 + k2) / 2;
    int u = s + (k1 - k2) / 2;
    if (w < 1 || u < 1) domain_error("outside factorable range");
    ClosedForm lead = make_closed_form(pow(Rational(2), -k1), k1 - k2, w, 0, D);
    return lead * gamma_c(w) * gamma_c(u);
}

ClosedForm interpolation_gamma_quotient(int k1, int k2, int s) {
    if ((k1 - k2) % 2 != 0) domain_error("non-paritious weight");
    int g1 = s + (k1 + k2 - 2) / 2, g2 = s + (k1 - k2) / 2;
    if (g1 < 1 || g2 < 1) domain_error("outside factorable range");
    int n = 2 * s + k1 - 1;
    // (-2 pi i)^n = (-2)^n pi^n i^n
    Rational num = Rational(factorial(g1 - 1) * factorial(g2 - 1));
    Rational den = pow(Rational(2), k1 - 2) * pow(Rational(-2), n);
    return make_closed_form(num / den, -(1 - k2) - n, 0, n, 1);
}

ClosedForm siegel_phi_inf(int k, int s) {
    if (k % 2 != 0) domain_error("odd weight");
    return make_closed_form(pow(Rational(2), s - k / 2), k, 0, 0, 1) * gamma_c(s + k / 2);
}

QuadratureCheck archimedean_quadrature(int k1, int k2, long D, int s) {
    ClosedForm closed = archimedean_factor(k1, k2, D, s);
    const double pi = std::acos(-1.0);
    int k = k1 - k2;
    // f(1) = int_{R^x} Phi((0, t)) |t|^{2s} d^x t with Phi = 2^{1-k} (x + i y)^k e^{-pi (x^2 + y^2)}
    double t_part = 2.0 * std::pow(2.0, 1 - k) * integrate_half_line({static_cast<double>(k + 2 * s), pi, true});
    double y_part = integrate_half_line(
        {static_cast<double>((k1 + k2) / 2 + s - 1), 4 * pi / std::sqrt(static_cast<double>(D)), false});
    std::complex<double> ik = std::pow(std::complex<double>(0, 1), k);
    std::complex<double> quad = ik * t_part * y_part;
    std::complex<double> c = closed.numeric();
    QuadratureCheck q;
    q.closed = c.real() + c.imag();
    q.quadrature = quad.real() + quad.imag();
    q.relative_error = std::abs(quad - c) / std::abs(c);
    return q;
}

}  // namespace asai
