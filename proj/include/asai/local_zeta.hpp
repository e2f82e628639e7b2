#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "asai/archimedean.hpp"
#include "asai/series.hpp"

namespace asai {

enum class ExtensionType { Split, Inert, Ramified };

std::string extension_name(ExtensionType t);

struct LocalFieldDatum {
    long qK = 2;
    ExtensionType type = ExtensionType::Inert;

    static LocalFieldDatum make(long qK, ExtensionType t);
    long qL() const { return type == ExtensionType::Inert ? qK * qK : qK; }
    int e() const { return type == ExtensionType::Ramified ? 2 : 1; }
    bool split() const { return type == ExtensionType::Split; }
    int components() const { return split() ? 2 : 1; }
};

// Outcome of a coefficient-wise comparison. Indices are exponents of X (Laurent allowed).
struct IdentityReport {
    std::string tag;
    bool ok = true;
    int order = 0;
    int first_mismatch = 0;
    std::string lhs, rhs;
};

template <class R>
IdentityReport compare_coefficients(const std::string& tag, const std::vector<R>& lhs, const std::vector<R>& rhs,
                                    int first_index = 0) {
    IdentityReport r;
    r.tag = tag;
    r.order = static_cast<int>(std::min(lhs.size(), rhs.size()));
    for (int i = 0; i < r.order; ++i) {
        if (lhs[i] == rhs[i]) continue;
        r.ok = false;
        r.first_mismatch = first_index + i;
        r.lhs = asai::str(lhs[i]);
        r.rhs = asai::str(rhs[i]);
        return r;
    }
    return r;
}

template <class R>
IdentityReport compare_expansions(const std::string& tag, const RationalFunction<R>& lhs,
                                  const RationalFunction<R>& rhs, int order) {
    return compare_coefficients(tag, expand_rational_function(lhs, order).coeffs(),
                                expand_rational_function(rhs, order).coeffs());
}

// One component of the torus values: generating function and V_0..V_{T-1}.
template <class R>
using Multisets = std::type_identity_t<std::vector<std::vector<R>>>;

template <class R>
struct TorusComponent {
    RationalFunction<R> generating;
    FormalSeries<R> values;
};

template <class R>
struct WhittakerTorusSeries {
    LocalFieldDatum datum;
    std::vector<TorusComponent<R>> components;
};

template <class R>
WhittakerTorusSeries<R> whittaker_series(const LocalFieldDatum& datum, const Multisets<R>& C,
                                         int order) {
    if (static_cast<int>(C.size()) != datum.components())
        domain_error(datum.split() ? "split datum needs two multisets" : "field datum needs one multiset");
    WhittakerTorusSeries<R> w{datum, {}};
    for (const auto& c : C) {
        if (c.size() > 2) domain_error("at most two Satake parameters per component");
        w.components.push_back({RationalFunction<R>(Polynomial<R>(R(1)), characteristic_polynomial(c)),
                                FormalSeries<R>(complete_homogeneous(c, order))});
    }
    return w;
}

// Same, from the Hecke polynomials 1 - a Y + chi Y^2 (roots need not lie in R).
template <class R>
WhittakerTorusSeries<R> whittaker_series_from_polynomials(const LocalFieldDatum& datum,
                                                          const std::vector<Polynomial<R>>& P, int order) {
    if (static_cast<int>(P.size()) != datum.components())
        domain_error(datum.split() ? "split datum needs two polynomials" : "field datum needs one polynomial");
    WhittakerTorusSeries<R> w{datum, {}};
    for (const auto& p : P) {
        if (p.degree() > 2 || p.coeff(0) != R(1)) domain_error("Hecke polynomial must be 1 + O(Y) of degree <= 2");
        RationalFunction<R> g(Polynomial<R>(R(1)), p);
        w.components.push_back({g, expand_rational_function(g, order)});
    }
    return w;
}

// sum_n c_{2n} X^n for the expansion of N/P.
template <class R>
RationalFunction<R> even_part(const RationalFunction<R>& G) {
    const auto& N = G.num();
    const auto& P = G.den();
    Polynomial<R> Q = (P * P.negate_var()).decimate(2);
    Polynomial<R> top = N * P.negate_var() + N.negate_var() * P;
    return RationalFunction<R>(top.scale(R(Rational(1, 2))).decimate(2), Q);
}

// Coefficient-wise product of the expansions of two rational functions.
template <class R>
RationalFunction<R> hadamard_product(const RationalFunction<R>& G1, const RationalFunction<R>& G2) {
    Polynomial<R> Q = tensor_polynomial(G1.den(), G2.den());
    int d1 = std::max(G1.den().degree(), 0), d2 = std::max(G2.den().degree(), 0);
    int excess = std::max({0, G1.num().degree() - d1 + 1, G2.num().degree() - d2 + 1});
    int bound = std::max(Q.degree(), 0) + excess;
    int length = bound + std::max(Q.degree(), 0) + 4;
    auto s1 = expand_rational_function(G1, length), s2 = expand_rational_function(G2, length);
    std::vector<R> h(length, R(0));
    for (int n = 0; n < length; ++n) h[n] = s1[n] * s2[n];
    auto prod = FormalSeries<R>(h) * FormalSeries<R>::from_polynomial(Q, length);
    std::vector<R> num;
    for (int n = 0; n < length; ++n) {
        if (n < bound) num.push_back(prod[n]);
        else if (!is_zero(prod[n])) domain_error("hadamard product numerator did not terminate");
    }
    return RationalFunction<R>(Polynomial<R>(std::move(num)), Q);
}

// Z(W; s) = sum_n W(diag(pi_K^n, 1)) q_K^{-n(s-1)} in X = q_K^{-s}.
template <class R>
RationalFunction<R> torus_zeta(const WhittakerTorusSeries<R>& w) {
    const auto& d = w.datum;
    if (d.split()) return hadamard_product(w.components[0].generating, w.components[1].generating);
    if (d.type == ExtensionType::Inert) return w.components[0].generating;
    return even_part(w.components[0].generating);
}

// f^{Phi_0}(1; chi, s) = L(chi, 2s) for chi unramified with chi(pi) = c.
template <class R>
RationalFunction<R> siegel_phi0(const R& c) {
    return RationalFunction<R>::geometric(c, 2);
}

// f^{Phi_r}(1; chi, s): (q+1) q^{r-1} if chi is trivial on 1 + p^r (conductor exponent <= r), else 0.
Rational siegel_phi_r(long q, int r, int chi_conductor_exponent);

// f^{Phi_inf^{(k)}}(1; 1, s) = i^k 2^{s-k/2} Gamma_C(s + k/2).
ClosedForm siegel_phi_inf(int k, int s);

// prod over the multiset of (1 - a^e X)
template <class R>
Polynomial<R> linear_factors(const std::vector<R>& C, int e = 1) {
    Polynomial<R> p(R(1));
    for (const auto& a : C) {
        R ae(1);
        for (int i = 0; i < e; ++i) ae = ae * a;
        p = p * Polynomial<R>::one_minus(ae);
    }
    return p;
}

// Closed-form unramified Asai factors built from linear factors only.
template <class R>
RationalFunction<R> closed_form_unramified(const LocalFieldDatum& d, const Multisets<R>& C,
                                           const R& chi, bool flip_first = false) {
    std::vector<R> roots;
    Polynomial<R> extra(R(1));
    if (d.split()) {
        for (const auto& a : C[0])
            for (const auto& b : C[1]) roots.push_back(a * b);
    } else if (d.type == ExtensionType::Inert) {
        roots = C[0];
        extra = Polynomial<R>::one_minus(chi, 2);
    } else {
        // symmetric square of the pair
        const auto& c = C[0];
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i; j < c.size(); ++j) roots.push_back(c[i] * c[j]);
    }
    if (flip_first && !roots.empty()) roots[0] = R(0) - roots[0];
    return RationalFunction<R>(Polynomial<R>(R(1)), linear_factors(roots) * extra);
}

// L(chi, 2s) Z(W^sph, s) against the closed form. perturb flips the sign of one closed-form factor.
template <class R>
IdentityReport check_unramified_rs(const LocalFieldDatum& d, const Multisets<R>& C, const R& chi,
                                   int order, bool perturb = false) {
    for (const auto& c : C)
        if (c.size() != 2) domain_error("unramified data needs two Satake parameters per component");
    auto lhs = siegel_phi0(chi) * torus_zeta(whittaker_series<R>(d, C, order));
    auto rhs = closed_form_unramified(d, C, chi, perturb);
    std::string tag = std::string("unramified Rankin-Selberg, ") + extension_name(d.type);
    return compare_expansions(tag, lhs, rhs, order);
}

// Torus zeta integral of the new vector against prod_{a in C} (1 - a^e X)^{-1}.
template <class R>
IdentityReport check_imprimitive_product(const LocalFieldDatum& d, const std::vector<R>& C, int order) {
    if (d.split()) domain_error("field datum expected");
    auto lhs = torus_zeta(whittaker_series<R>(d, {C}, order));
    RationalFunction<R> rhs(Polynomial<R>(R(1)), linear_factors(C, d.e()));
    return compare_expansions(std::string("imprimitive factor, ") + extension_name(d.type), lhs, rhs, order);
}

// The imprimitive factor of the definition: Z for ramified pi (|C| <= 1 on a field, conductor r0 >= 1),
// L(chi, 2s) Z for unramified pi (r0 = 0), each against its closed form. On a ramified field the
// unramified closed form needs chi = (alpha beta)^2.
template <class R>
IdentityReport check_imprimitive_identity(const LocalFieldDatum& d, const std::vector<R>& C, int r0, int order,
                                          const R& chi = R(1)) {
    if (d.split()) domain_error("field datum expected");
    if (r0 >= 1) {
        if (C.size() > 1) domain_error("a ramified representation has at most one Satake parameter");
        return check_imprimitive_product(d, C, order);
    }
    if (C.size() != 2) domain_error("an unramified representation has two Satake parameters");
    return check_unramified_rs(d, {C}, chi, order);
}

// Torus values of the ordinary stabilization (1 - B/U^t) W^sph at p, in the arithmetic
// normalization A = p^{1/2} alpha, B = p^{1/2} beta: V_n = p^n W(diag(p^n, 1) w), reported as V_0 and V_n / V_0.
template <class R>
struct StabilizedSeries {
    long p = 0;
    R v0;
    FormalSeries<R> normalized;
};

template <class R>
StabilizedSeries<R> stabilized_whittaker_series(const R& A, const R& B, long p, int order);

// U^t W = A W at diag(p^m, 1) k for the coset representatives k and m < depth.
template <class R>
IdentityReport stabilized_eigen_check(const R& A, const R& B, long p, int depth);

// Split local integral at trivial nu: Z(W, Phi; 1, s) / V_0 against p/(p+1) E_p(s) L_As(s) as Laurent series in X =
// p^{-s}, for arithmetic parameters A, B (first place, stabilized) and C, D (second place, spherical).
template <class R>
IdentityReport check_localintp_trivial_nu(const R& A, const R& B, const R& C, const R& D, long p, int order,
                                          bool drop_volume_factor = false);

// Laurent coefficients of Z(W, Phi; 1, s) (unnormalized) at X^{-2}..X^{order-1}.
template <class R>
std::vector<R> localintp_lhs(const R& A, const R& B, const R& C, const R& D, long p, int order);

// p/(p+1) E_p L_As at X^{-2}..X^{order-1}.
template <class R>
std::vector<R> localintp_rhs(const R& A, const R& B, const R& C, const R& D, long p, int order);

}  // namespace asai
