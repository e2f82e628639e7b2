#include "asai/asai_lfun.hpp"

#include <cmath>
#include <limits>

namespace asai {

std::vector<int> CriticalRange::points() const {
    std::vector<int> out;
    for (int s = lo; s <= hi; ++s) out.push_back(s);
    return out;
}

CriticalRange critical_range(int k1, int k2) {
    if ((k1 - k2) % 2 != 0) domain_error("non-paritious weight");
    CriticalRange r;
    r.k1 = k1;
    r.k2 = k2;
    r.lo = (2 - k1 + k2) / 2;
    r.hi = (k1 - k2) / 2;
    return r;
}

Cyclotomic modified_euler_factor(const SatakeAtP<Cyclotomic>& x, long p, int s, const DirichletCharacter& nu) {
    if (nu.is_trivial()) return modified_euler_factor(x, p, s);
    if (is_zero(x.alpha1) || is_zero(x.alpha2) || is_zero(x.beta2)) domain_error("invalid Satake data");
    long N = nu.conductor();
    int r = 0;
    while (N % p == 0) {
        N /= p;
        ++r;
    }
    if (N != 1 || r == 0) domain_error("character must have p-power conductor");
    Cyclotomic G = gauss_sum(nu);
    Cyclotomic base = Cyclotomic(pow(Rational(p), 2 * s)) * inv(x.alpha1 * x.alpha1 * x.alpha2 * x.beta2);
    Cyclotomic out = inv(G * G);
    for (int i = 0; i < r; ++i) out = out * base;
    return out;
}

ExtensionType extension_type(Splitting s) {
    switch (s) {
        case Splitting::Split: return ExtensionType::Split;
        case Splitting::Inert: return ExtensionType::Inert;
        case Splitting::Ramified: return ExtensionType::Ramified;
    }
    return ExtensionType::Inert;
}

template <class R>
RationalFunction<R> form_local_factor(const HilbertEigenform& form, long ell) {
    Splitting s = form.splitting(ell);
    std::vector<Polynomial<R>> P;
    for (const auto& Q : form.primes_over(ell)) {
        R a = form.eigenvalue<R>(Q), c = form.chi<R>(Q);
        P.push_back(Polynomial<R>(std::vector<R>{R(1), R(0) - a, c}));
    }
    if (!form.ramified_at(ell)) return local_asai_unramified_hecke(s, P, form.chi_rational_at<R>(ell));
    auto d = LocalFieldDatum::make(ell, extension_type(s));
    return torus_zeta(whittaker_series_from_polynomials(d, P, 4));
}

template <class R>
std::map<long, R> euler_product_coefficients(const HilbertEigenform& form, long n_max, long B) {
    check_coverage(form, n_max, B);
    std::map<long, FormalSeries<R>> local;
    for (long ell = 2; ell <= std::min(B, n_max); ++ell) {
        if (!is_prime(ell)) continue;
        int vmax = 0;
        for (long q = ell; q <= n_max; q *= ell) ++vmax;
        local.emplace(ell, expand_rational_function(form_local_factor<R>(form, ell), vmax + 1));
    }
    std::map<long, R> out;
    for (long n = 1; n <= n_max; ++n) {
        auto f = factorize(n);
        bool smooth = true;
        for (auto [l, e] : f) smooth = smooth && l <= B;
        if (!smooth) continue;
        R v(1);
        for (auto [l, e] : f) v = v * local.at(l)[e];
        out.emplace(n, std::move(v));
    }
    return out;
}

template <class R>
IdentityReport check_euler_dirichlet(const HilbertEigenform& form, long n_max, long B) {
    auto lhs = euler_product_coefficients<R>(form, n_max, B);
    auto rhs = asai_dirichlet_coefficients<R>(form, n_max, B);
    IdentityReport r;
    r.tag = "euler-dirichlet";
    r.order = static_cast<int>(lhs.size());
    for (const auto& [n, v] : lhs) {
        const R& w = rhs.at(n);
        if (v == w) continue;
        r.ok = false;
        r.first_mismatch = static_cast<int>(n);
        r.lhs = asai::str(v);
        r.rhs = asai::str(w);
        break;
    }
    return r;
}

IdentityReport check_euler_dirichlet(const HilbertEigenform& form, long n_max, long B) {
    switch (form.domain) {
        case Domain::Rational: return check_euler_dirichlet<Rational>(form, n_max, B);
        case Domain::Cyclotomic: return check_euler_dirichlet<Cyclotomic>(form, n_max, B);
        case Domain::Polynomial: return check_euler_dirichlet<MPoly>(form, n_max, B);
    }
    return {};
}

double divisor4_tail_bound(double sigma, long N) {
    if (sigma <= 1) domain_error("outside convergence region");
    double L = 1 + std::log(static_cast<double>(N));
    double d = sigma - 1;
    double sum = 0, fall = 1;
    for (int j = 0; j <= 3; ++j) {
        sum += fall * std::pow(L, 3 - j) / std::pow(d, j + 1);
        fall *= 3 - j;
    }
    return sigma * std::pow(static_cast<double>(N), 1 - sigma) * sum;
}

LInterval evaluate_zeta_surrogate(double s, long n_terms) {
    if (s <= 1) domain_error("outside convergence region");
    if (n_terms < 1) domain_error("need at least one term");
    long double acc = 0;
    for (long n = n_terms; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    LInterval out;
    out.value = static_cast<double>(acc);
    out.radius = std::pow(static_cast<double>(n_terms), 1 - s) / (s - 1) +
                 n_terms * std::numeric_limits<double>::epsilon();
    out.s = s;
    out.n_terms = n_terms;
    return out;
}

namespace {

std::complex<double> numeric(const Rational& x) { return x.get_d(); }
std::complex<double> numeric(const Cyclotomic& x) { return x.embed(); }

template <class R>
LInterval partial_sum(const HilbertEigenform& form, const DirichletCharacter& nu, double s, long n_terms) {
    auto c = asai_dirichlet_coefficients<R>(form, n_terms);
    std::complex<long double> acc = 0;
    long double mass = 0;
    for (long n = n_terms; n >= 1; --n) {
        std::complex<double> cn = numeric(c.at(n));
        std::complex<double> v = nu.value_complex(n);
        if (v == 0.0 || cn == 0.0) continue;
        long double w = std::pow(static_cast<long double>(n), -static_cast<long double>(s));
        std::complex<long double> t(static_cast<long double>((cn * v).real()),
                                    static_cast<long double>((cn * v).imag()));
        acc += t * w;
        mass += std::abs(t) * w;
    }
    LInterval out;
    out.value = std::complex<double>(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    out.radius =
        divisor4_tail_bound(s, n_terms) + 64 * std::numeric_limits<double>::epsilon() * static_cast<double>(mass);
    out.s = s;
    out.n_terms = n_terms;
    return out;
}

}  // namespace

LInterval evaluate_L_convergent(const HilbertEigenform& form, const DirichletCharacter& nu, double s, long n_terms) {
    if (s <= 1) domain_error("outside convergence region");
    if (n_terms < 1) domain_error("need at least one term");
    switch (form.domain) {
        case Domain::Rational: return partial_sum<Rational>(form, nu, s, n_terms);
        case Domain::Cyclotomic: return partial_sum<Cyclotomic>(form, nu, s, n_terms);
        case Domain::Polynomial: break;
    }
    domain_error("numeric evaluation requires numeric eigenvalues");
}

#define ASAI_INSTANTIATE(R)                                                                         \
    template RationalFunction<R> form_local_factor<R>(const HilbertEigenform&, long);              \
    template std::map<long, R> euler_product_coefficients<R>(const HilbertEigenform&, long, long); \
    template IdentityReport check_euler_dirichlet<R>(const HilbertEigenform&, long, long);

ASAI_INSTANTIATE(Rational)
ASAI_INSTANTIATE(Cyclotomic)
ASAI_INSTANTIATE(MPoly)

}  // namespace asai
