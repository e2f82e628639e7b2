#include "asai/local_zeta.hpp"

namespace asai {

namespace {

struct Mat {
    Rational a, b, c, d;
};

Mat operator*(const Mat& x, const Mat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat diag(const Rational& x, const Rational& y) { return {x, 0, 0, y}; }

int val(const Rational& x, long p) { return sgn(x) == 0 ? kInfiniteValuation : valuation(x, p); }

template <class R>
R rpow(const R& x, int e) {
    R base = e < 0 ? inv(x) : x;
    R r(1);
    for (int i = 0; i < std::abs(e); ++i) r = r * base;
    return r;
}

// Spherical Whittaker function averaged over the units acting on the left, arithmetic parameters A, B:
// W(diag(p^m, 1)) = p^{-m} h_m(A, B), central character AB/p at p.
template <class R>
class SphericalModel {
public:
    SphericalModel(R A, R B, long p) : A_(std::move(A)), B_(std::move(B)), p_(p) {
        omega_ = A_ * B_ * R(make_rational(1, p));
        h_.push_back(R(1));
        bpow_.push_back(R(1));
    }

    R operator()(const Mat& g) {
        Rational det = g.a * g.d - g.b * g.c;
        Rational y1, y2, x;
        if (val(g.c, p_) >= val(g.d, p_)) {
            y1 = det / g.d;
            y2 = g.d;
            x = g.b / g.d;
        } else {
            y1 = -det / g.c;
            y2 = g.c;
            x = g.a / g.c;
        }
        int m = val(y1, p_) - val(y2, p_);
        if (m < 0) return R(0);
        int vx = val(x, p_);
        Rational r = vx >= 0 ? Rational(1) : (vx == -1 ? make_rational(-1, p_ - 1) : Rational(0));
        if (sgn(r) == 0) return R(0);
        return R(r * pow(Rational(p_), -m)) * rpow(omega_, val(y2, p_)) * h(m);
    }

    const R& h(int m) {
        while (static_cast<int>(h_.size()) <= m) {
            bpow_.push_back(bpow_.back() * B_);
            h_.push_back(A_ * h_.back() + bpow_.back());
        }
        return h_[m];
    }

private:
    R A_, B_, omega_;
    long p_;
    std::vector<R> h_, bpow_;
};

// Sum of coef * W0(g h) over the terms.
template <class R>
struct Translates {
    std::vector<std::pair<R, Mat>> terms;

    R operator()(SphericalModel<R>& W0, const Mat& g) const {
        R s(0);
        for (const auto& [co, h] : terms) {
            R w = W0(g * h);
            if (!is_zero(w)) s += co * w;
        }
        return s;
    }
};

Mat ut_coset(long p, long c) { return Mat{1, 0, Rational(p * c), Rational(p)}; }

// (1 - B/U^t) W^sph = A^{-1} (U^t - B) W^sph, U^t the right action summed over (1 0; pc p).
template <class R>
Translates<R> stabilized_vector(const R& A, const R& B, long p) {
    Translates<R> t;
    R ia = inv(A);
    for (long c = 0; c < p; ++c) t.terms.push_back({ia, ut_coset(p, c)});
    t.terms.push_back({R(0) - B * ia, Mat{1, 0, 0, 1}});
    return t;
}

// pi(diag(1,p)) of the stabilized vector; this is the translate entering the torus series and the integral.
template <class R>
Translates<R> translated_vector(const R& A, const R& B, long p) {
    auto t = stabilized_vector(A, B, p);
    for (auto& term : t.terms) term.second = diag(1, p) * term.second;
    return t;
}

// Representatives of the double cosets met by Phi_{p,1,1}: big cell (0 -1; 1 d), small cell (1 0; pj 1).
std::vector<Mat> big_cell(long p) {
    std::vector<Mat> reps;
    for (long d = 0; d < p * p; ++d) reps.push_back(Mat{0, -1, 1, Rational(d)});
    return reps;
}

std::vector<Mat> small_cell(long p) {
    std::vector<Mat> reps;
    for (long j = 1; j < p; ++j) reps.push_back(Mat{1, 0, Rational(p * j), 1});
    return reps;
}

template <class R>
void check_regular(const R& A, const R& B) {
    if (A == B) domain_error("non-regular Satake pair");
    if (is_zero(A)) domain_error("invalid Satake data");
}

}  // namespace

template <class R>
StabilizedSeries<R> stabilized_whittaker_series(const R& A, const R& B, long p, int order) {
    check_regular(A, B);
    SphericalModel<R> W0(A, B, p);
    auto W1 = translated_vector(A, B, p);
    Mat w{0, -1, 1, 0};
    std::vector<R> v;
    for (int n = 0; n < order; ++n) v.push_back(R(pow(Rational(p), n)) * W1(W0, diag(pow(Rational(p), n), 1) * w));
    StabilizedSeries<R> s;
    s.p = p;
    s.v0 = order > 0 ? v[0] : W1(W0, w);
    if (is_zero(s.v0)) domain_error("stabilized vector vanishes at the identity");
    R iv = inv(s.v0);
    for (auto& x : v) x = x * iv;
    s.normalized = FormalSeries<R>(std::move(v));
    return s;
}

template <class R>
IdentityReport stabilized_eigen_check(const R& A, const R& B, long p, int depth) {
    check_regular(A, B);
    SphericalModel<R> W0(A, B, p);
    auto Ws = stabilized_vector(A, B, p);
    std::vector<Mat> ks{Mat{1, 0, 0, 1}, Mat{0, -1, 1, 0}};
    for (const auto& k : big_cell(p)) ks.push_back(k);
    for (const auto& k : small_cell(p)) ks.push_back(k);
    std::vector<R> lhs, rhs;
    for (int m = 0; m < depth; ++m) {
        for (const auto& k : ks) {
            Mat g = diag(pow(Rational(p), m), 1) * k;
            R u(0);
            for (long c = 0; c < p; ++c) u += Ws(W0, g * ut_coset(p, c));
            lhs.push_back(u);
            rhs.push_back(A * Ws(W0, g));
        }
    }
    return compare_coefficients("U^t eigenvector", lhs, rhs);
}

template <class R>
std::vector<R> localintp_lhs(const R& A, const R& B, const R& C, const R& D, long p, int order) {
    check_regular(A, B);
    SphericalModel<R> W0(A, B, p), W2(C, D, p);
    auto W1 = translated_vector(A, B, p);
    const auto big = big_cell(p), small = small_cell(p);
    const Rational mu = make_rational(1, p * (p + 1));
    const int top = order + 2;
    // integral of W1 over the cell at torus height m
    auto cell = [&](const std::vector<Mat>& reps, int m) -> R {
        R s(0);
        Mat t = diag(pow(Rational(p), m), 1);
        for (const auto& k : reps) s += W1(W0, t * k);
        return s * R(mu);
    };
    R chi = A * B * C * D * R(make_rational(1, p * p));
    R small_coef = R(0) - inv(R(Rational(p)) * chi);
    std::vector<R> z(top + 3, R(0));  // index j + 2 holds X^j
    for (int m = 0; m <= top; ++m) {
        const R& hm = W2.h(m);
        z[m + 2] += R(1 - make_rational(1, p)) * cell(big, m) * hm;
        z[m] += small_coef * cell(small, m) * hm;
    }
    z.resize(order + 2);
    return z;
}

template <class R>
std::vector<R> localintp_rhs(const R& A, const R& B, const R& C, const R& D, long p, int order) {
    R ip(make_rational(1, p));
    // X^2 E_p(X): (X - 1/(AC)) (X - 1/(AD)) (1 - BC X/p) (1 - BD X/p)
    auto shifted = [](const R& a) { return Polynomial<R>(std::vector<R>{R(0) - a, R(1)}); };
    Polynomial<R> E = shifted(inv(A * C)) * shifted(inv(A * D)) * Polynomial<R>::one_minus(B * C * ip) *
                      Polynomial<R>::one_minus(B * D * ip);
    Polynomial<R> den = linear_factors(std::vector<R>{A * C * ip, A * D * ip, B * C * ip, B * D * ip});
    auto s = expand_rational_function(RationalFunction<R>(E, den), order + 2);
    std::vector<R> out;
    for (int i = 0; i < order + 2; ++i) out.push_back(s[i]);
    return out;
}

template <class R>
IdentityReport check_localintp_trivial_nu(const R& A, const R& B, const R& C, const R& D, long p, int order,
                                          bool drop_volume_factor) {
    auto st = stabilized_whittaker_series(A, B, p, 1);
    auto lhs = localintp_lhs(A, B, C, D, p, order);
    R iv = inv(st.v0);
    for (auto& x : lhs) x = x * iv;
    auto rhs = localintp_rhs(A, B, C, D, p, order);
    if (!drop_volume_factor) {
        R vol(make_rational(p, p + 1));
        for (auto& x : rhs) x = x * vol;
    }
    return compare_coefficients("split local integral at p, trivial nu", lhs, rhs, -2);
}

#define ASAI_INSTANTIATE(R)                                                                                       \
    template StabilizedSeries<R> stabilized_whittaker_series<R>(const R&, const R&, long, int);                  \
    template IdentityReport stabilized_eigen_check<R>(const R&, const R&, long, int);                            \
    template std::vector<R> localintp_lhs<R>(const R&, const R&, const R&, const R&, long, int);                 \
    template std::vector<R> localintp_rhs<R>(const R&, const R&, const R&, const R&, long, int);                 \
    template IdentityReport check_localintp_trivial_nu<R>(const R&, const R&, const R&, const R&, long, int, bool);

ASAI_INSTANTIATE(Rational)
ASAI_INSTANTIATE(MPoly)

}  // namespace asai
