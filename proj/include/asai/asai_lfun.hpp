#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "asai/archimedean.hpp"
#include "asai/hilbert.hpp"
#include "asai/local_zeta.hpp"

namespace asai {

struct CriticalRange {
    int k1 = 0, k2 = 0;
    int lo = 0, hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(int s) const { return lo <= s && s <= hi; }
    std::vector<int> points() const;
};

// (2 - k1 + k2)/2 <= s <= (k1 - k2)/2
CriticalRange critical_range(int k1, int k2);

// Unitary Satake parameters at the two places above p; alpha1 is the unit root at the first one.
template <class R>
struct SatakeAtP {
    R alpha1, beta1, alpha2, beta2;
};

// The four factors of E_p at trivial nu, in display order:
// 1 - p^{s-1}/(a1 a2), 1 - p^{s-1}/(a1 b2), 1 - b1 a2/p^s, 1 - b1 b2/p^s.
template <class R>
std::array<R, 4> modified_euler_factors(const SatakeAtP<R>& x, long p, int s) {
    if (is_zero(x.alpha1) || is_zero(x.alpha2) || is_zero(x.beta2)) domain_error("invalid Satake data");
    R up(pow(Rational(p), s - 1)), down(pow(Rational(p), -s));
    return {R(1) - up * inv(x.alpha1 * x.alpha2), R(1) - up * inv(x.alpha1 * x.beta2),
            R(1) - x.beta1 * x.alpha2 * down, R(1) - x.beta1 * x.beta2 * down};
}

template <class R>
R modified_euler_factor(const SatakeAtP<R>& x, long p, int s) {
    auto f = modified_euler_factors(x, p, s);
    return f[0] * f[1] * f[2] * f[3];
}

// Both branches: nu trivial, or nu primitive of conductor p^r giving G(nu)^{-2} (p^{2s}/(a1^2 a2 b2))^r.
Cyclotomic modified_euler_factor(const SatakeAtP<Cyclotomic>& x, long p, int s, const DirichletCharacter& nu);

ExtensionType extension_type(Splitting s);

// L(chi, 2s) Z(W^sph, s) for unramified pi, from Satake parameters (two per place).
template <class R>
RationalFunction<R> local_asai_unramified(Splitting s, const Multisets<R>& C, const R& chi, int order = 8) {
    for (const auto& c : C) {
        if (c.size() != 2) domain_error("use imprimitive ramified factor");
        for (const auto& a : c)
            if (is_zero(a)) domain_error("invalid Satake data");
    }
    auto d = LocalFieldDatum::make(2, extension_type(s));
    return siegel_phi0(chi) * torus_zeta(whittaker_series<R>(d, C, order));
}

// Same from the Hecke polynomials 1 - a Y + chi(P) Y^2 of the places above ell.
template <class R>
RationalFunction<R> local_asai_unramified_hecke(Splitting s, const std::vector<Polynomial<R>>& P, const R& chi) {
    for (const auto& q : P)
        if (q.degree() != 2) domain_error("use imprimitive ramified factor");
    auto d = LocalFieldDatum::make(2, extension_type(s));
    return siegel_phi0(chi) * torus_zeta(whittaker_series_from_polynomials(d, P, 4));
}

// prod_{a in C} (1 - a^e X)^{-1} on a field (e in {1, 2}); prod (1 - a1 a2 X)^{-1} for split.
template <class R>
RationalFunction<R> local_asai_imprimitive_field(const std::vector<R>& C, int e) {
    if (e != 1 && e != 2) domain_error("ramification index must be 1 or 2");
    if (C.size() > 1) domain_error("a ramified representation has at most one Satake parameter");
    return RationalFunction<R>(Polynomial<R>(R(1)), linear_factors(C, e));
}

template <class R>
RationalFunction<R> local_asai_imprimitive_split(const std::vector<R>& C1, const std::vector<R>& C2) {
    if (C1.size() > 1 && C2.size() > 1) domain_error("a ramified representation has at most one Satake parameter");
    std::vector<R> roots;
    for (const auto& a : C1)
        for (const auto& b : C2) roots.push_back(a * b);
    return RationalFunction<R>(Polynomial<R>(R(1)), linear_factors(roots));
}

// Local factor of the form at ell in X = ell^{-s}: L(chi_Q, 2s) Z(W^sph) where unramified, Z(W^new) otherwise.
template <class R>
RationalFunction<R> form_local_factor(const HilbertEigenform& form, long ell);

// Coefficients of the Euler product over ell <= B, for n <= n_max with prime factors <= B.
template <class R>
std::map<long, R> euler_product_coefficients(const HilbertEigenform& form, long n_max, long B);

// Euler product against the Hecke-recursion Dirichlet coefficients; first_mismatch is n.
template <class R>
IdentityReport check_euler_dirichlet(const HilbertEigenform& form, long n_max, long B);

IdentityReport check_euler_dirichlet(const HilbertEigenform& form, long n_max, long B);

struct LInterval {
    std::complex<double> value;
    double radius = 0;
    double s = 0;
    long n_terms = 0;
};

// sum_{n > N} d_4(n) n^{-sigma}, bounded through D_4(x) <= x (1 + log x)^3.
double divisor4_tail_bound(double sigma, long N);

// Partial sums of zeta(s) with tail N^{1-s}/(s-1).
LInterval evaluate_zeta_surrogate(double s, long n_terms);

// sum_{n <= N} c_n nu(n) n^{-s} with the d_4 tail bound.
LInterval evaluate_L_convergent(const HilbertEigenform& form, const DirichletCharacter& nu, double s, long n_terms);

extern template RationalFunction<Rational> form_local_factor<Rational>(const HilbertEigenform&, long);
extern template RationalFunction<Cyclotomic> form_local_factor<Cyclotomic>(const HilbertEigenform&, long);
extern template RationalFunction<MPoly> form_local_factor<MPoly>(const HilbertEigenform&, long);

}  // namespace asai
