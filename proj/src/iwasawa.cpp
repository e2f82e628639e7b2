#include "asai/iwasawa.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "asai/error.hpp"
#include "asai/kernels.hpp"

namespace asai {

namespace {

uint64_t neg(uint64_t x, uint64_t q) { return x == 0 ? 0 : q - x; }
uint64_t addm(uint64_t a, uint64_t b, uint64_t q) { return (a + b) % q; }
uint64_t subm(uint64_t a, uint64_t b, uint64_t q) { return (a + q - b) % q; }

int valuation_of(uint64_t x, long p, int M) {
    if (x == 0) return M;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return std::min(v, M);
}

long pmod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// (1+p)^s mod q, s of either sign
uint64_t one_plus_p_pow(long p, long s, uint64_t q) {
    uint64_t g = (1 + static_cast<uint64_t>(p)) % q;
    if (s < 0) g = invmod(g, q);
    return powmod(g, static_cast<uint64_t>(s < 0 ? -s : s), q);
}

std::vector<uint64_t> series_mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b, size_t n, uint64_t q) {
    std::vector<uint64_t> c(n);
    kernels_for(q).convolve(a.data(), b.data(), c.data(), n, q);
    return c;
}

// F(L) for a series L, truncated to n terms
std::vector<uint64_t> compose(const std::vector<uint64_t>& f, const std::vector<uint64_t>& L, size_t n, uint64_t q) {
    std::vector<uint64_t> acc(n, 0);
    for (size_t k = f.size(); k-- > 0;) {
        acc = series_mul(acc, L, n, q);
        acc[0] = addm(acc[0], f[k], q);
    }
    return acc;
}

std::vector<uint64_t> series_pow(std::vector<uint64_t> base, uint64_t e, size_t n, uint64_t q) {
    std::vector<uint64_t> r(n, 0);
    r[0] = 1 % q;
    while (e) {
        if (e & 1) r = series_mul(r, base, n, q);
        e >>= 1;
        if (e) base = series_mul(base, base, n, q);
    }
    return r;
}

void check_compatible(const PAdicMeasure& a, const PAdicMeasure& b) {
    if (a.p != b.p || a.M != b.M) domain_error("measures over different p or precision");
}

int base_p_digits(long p, long n) {
    int d = 0;
    while (n > 0) {
        n /= p;
        ++d;
    }
    return d;
}

PAdicMeasure with_truncation(const PAdicMeasure& a, int NT) {
    PAdicMeasure r = a;
    r.NT = NT;
    for (auto& br : r.branches) br.resize(NT);
    return r;
}

}  // namespace

std::string PAdicScalar::str() const {
    std::string s = std::to_string(residue);
    if (shift != 0) s += "*" + std::to_string(p) + "^" + std::to_string(shift);
    return s;
}

PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b) {
    if (a.p != b.p || a.M != b.M) domain_error("scalars over different p or precision");
    uint64_t q = ipow(a.p, a.M);
    return {a.p, a.M, mulmod(a.residue, b.residue, q), a.shift + b.shift};
}

PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b) {
    if (a.p != b.p || a.M != b.M) domain_error("scalars over different p or precision");
    uint64_t q = ipow(a.p, a.M);
    const PAdicScalar& lo = a.shift <= b.shift ? a : b;
    const PAdicScalar& hi = a.shift <= b.shift ? b : a;
    int d = hi.shift - lo.shift;
    uint64_t up = d >= a.M ? 0 : mulmod(hi.residue, ipow(a.p, d), q);
    return {a.p, a.M, addm(lo.residue, up, q), lo.shift};
}

std::string LocallyAlgebraicCharacter::str() const {
    std::ostringstream o;
    o << "x^" << s;
    if (j != 0) o << "*omega^" << j;
    if (c != 0) o << "*psi_" << c;
    return o.str();
}

LocallyAlgebraicCharacter character_from_dirichlet(const DirichletCharacter& nu, long s, long p) {
    long N = nu.modulus();
    if (N == 1) return {s, 0, 0};
    if (N != p && N != p * p) domain_error("character modulus must be 1, p or p^2");
    long m = nu.root_order();
    long w = static_cast<long>(teichmuller(standard_generators(p)[0].g, p, N == p ? 1 : 2));
    long e = nu.exponent(w);
    if ((e * (p - 1)) % m != 0) domain_error("character is not a Teichmuller power on roots of unity");
    LocallyAlgebraicCharacter chi{s, pmod(e * (p - 1) / m, p - 1), 0};
    if (N == p * p) {
        long e1 = nu.exponent(1 + p);
        if ((e1 * p) % m != 0) domain_error("character value at 1+p is not a p-th root of unity");
        chi.c = pmod(e1 * p / m, p);
    }
    return chi;
}

uint64_t teichmuller(uint64_t u, long p, int M) {
    uint64_t q = ipow(p, M);
    if (u % p == 0) domain_error("Teichmuller lift of a non-unit");
    return powmod(u % q, ipow(p, M - 1), q);
}

uint64_t PAdicMeasure::modulus() const { return ipow(p, M); }

PAdicMeasure measure_zero(long p, int M, int NT) {
    if (p < 3 || M < 1 || NT < 1) domain_error("measure needs an odd prime p, M >= 1 and N_T >= 1");
    PAdicMeasure m;
    m.p = p;
    m.M = M;
    m.NT = NT;
    m.branches.assign(p - 1, std::vector<uint64_t>(NT, 0));
    return m;
}

PAdicMeasure measure_one(long p, int M, int NT) {
    PAdicMeasure m = measure_zero(p, M, NT);
    uint64_t q = m.modulus();
    for (auto& b : m.branches) b[0] = 1 % q;
    return m;
}

PAdicMeasure measure_random(std::mt19937_64& rng, long p, int M, int NT) {
    PAdicMeasure m = measure_zero(p, M, NT);
    std::uniform_int_distribution<uint64_t> d(0, m.modulus() - 1);
    for (auto& b : m.branches)
        for (auto& x : b) x = d(rng);
    return m;
}

int dirac_precision(long p, int M, int NT) { return M + base_p_digits(p, NT) + 1; }

PAdicMeasure measure_dirac(const PAdicInt& u, int M, int NT) {
    long p = u.prime();
    int K1 = dirac_precision(p, M, NT);
    int K = K1 - 1;
    if (!u.is_unit()) domain_error("Dirac measure at a non-unit");
    if (u.precision() < K1) domain_error("Dirac measure needs " + std::to_string(K1) + " p-adic digits");
    long double bound = 1;
    for (int i = 0; i < K1; ++i) bound *= p;
    if (bound > 4.0e18L) domain_error("Dirac measure precision exceeds 64-bit residues");
    uint64_t Q = ipow(p, K1);
    uint64_t uq = u.residue() % Q;
    uint64_t om = teichmuller(uq, p, K1);
    uint64_t w = mulmod(uq, invmod(om, Q), Q);  // principal unit
    uint64_t g = 1 + static_cast<uint64_t>(p), ginv = invmod(g, Q);
    uint64_t t = 0, pk = 1;
    uint64_t r = w;
    for (int i = 0; i < K; ++i) {
        uint64_t d = ((r - 1) / (pk * p)) % p;
        if (d) {
            t += d * pk;
            r = mulmod(r, powmod(ginv, d * pk, Q), Q);
        }
        pk *= p;
    }
    PAdicMeasure m = measure_zero(p, M, NT);
    uint64_t q = m.modulus();
    std::vector<uint64_t> base(NT, 0);
    base[0] = 1 % q;
    if (NT > 1) base[1] = 1 % q;
    std::vector<uint64_t> series = series_pow(base, t, NT, q);
    uint64_t omq = om % q;
    uint64_t c = 1 % q;
    for (auto& br : m.branches) {
        for (int n = 0; n < NT; ++n) br[n] = mulmod(c, series[n], q);
        c = mulmod(c, omq, q);
    }
    return m;
}

PAdicMeasure measure_dirac(const Integer& u, long p, int M, int NT) {
    return measure_dirac(PAdicInt::from_integer(u, p, dirac_precision(p, M, NT)), M, NT);
}

PAdicScalar measure_eval(const PAdicMeasure& mu, const LocallyAlgebraicCharacter& chi) {
    long p = mu.p;
    if (pmod(chi.c, p) != 0) domain_error("conductor p^2 character: use the extended evaluation");
    if (mu.NT < mu.M)
        domain_error("truncation too short: need N_T >= " + std::to_string(mu.M) + ", have " + std::to_string(mu.NT));
    uint64_t q = mu.modulus();
    const auto& F = mu.branches[pmod(chi.s + chi.j, p - 1)];
    uint64_t T = subm(one_plus_p_pow(p, chi.s, q), 1 % q, q);
    std::vector<uint64_t> powers(mu.NT);
    uint64_t x = 1 % q;
    for (int n = 0; n < mu.NT; ++n) {
        powers[n] = x;
        x = mulmod(x, T, q);
    }
    return {p, mu.M, kernels_for(q).dot(F.data(), powers.data(), F.size(), q), mu.shift};
}

std::vector<uint64_t> measure_eval_extended(const PAdicMeasure& mu, const LocallyAlgebraicCharacter& chi) {
    long p = mu.p;
    uint64_t q = mu.modulus();
    size_t d = static_cast<size_t>(p - 1);
    std::vector<uint64_t> out(d, 0);
    long c = pmod(chi.c, p);
    if (mu.shift != 0) domain_error("extended evaluation needs shift 0");
    if (c == 0) {
        out[0] = measure_eval(mu, chi).residue;
        return out;
    }
    if (mu.NT < mu.M * (p - 1))
        domain_error("truncation too short at conductor p^2: need N_T >= " + std::to_string(mu.M * (p - 1)) +
                     ", have " + std::to_string(mu.NT));
    // elements of (Z/q)[zeta]/Phi_p, multiplied through Z[x]/(x^p - 1)
    auto mul = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        std::vector<uint64_t> cyc(p, 0);
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k) {
                size_t e = (i + k) % p;
                cyc[e] = addm(cyc[e], mulmod(a[i], b[k], q), q);
            }
        std::vector<uint64_t> r(d);
        for (size_t i = 0; i < d; ++i) r[i] = subm(cyc[i], cyc[p - 1], q);
        return r;
    };
    std::vector<uint64_t> T(d, 0);
    uint64_t a = one_plus_p_pow(p, chi.s, q);
    if (c == p - 1) {
        for (size_t i = 0; i < d; ++i) T[i] = neg(a, q);
    } else {
        T[c] = a;
    }
    T[0] = subm(T[0], 1 % q, q);
    const auto& F = mu.branches[pmod(chi.s + chi.j, p - 1)];
    for (size_t n = F.size(); n-- > 0;) {
        out = mul(out, T);
        out[0] = addm(out[0], F[n], q);
    }
    return out;
}

PAdicMeasure measure_mul(const PAdicMeasure& a, const PAdicMeasure& b) {
    check_compatible(a, b);
    int NT = std::min(a.NT, b.NT);
    PAdicMeasure r = measure_zero(a.p, a.M, NT);
    uint64_t q = r.modulus();
    for (size_t k = 0; k < r.branches.size(); ++k) {
        std::vector<uint64_t> x(a.branches[k].begin(), a.branches[k].begin() + NT);
        std::vector<uint64_t> y(b.branches[k].begin(), b.branches[k].begin() + NT);
        r.branches[k] = series_mul(x, y, NT, q);
    }
    r.shift = a.shift + b.shift;
    return r;
}

PAdicMeasure measure_add(const PAdicMeasure& a, const PAdicMeasure& b) {
    check_compatible(a, b);
    int NT = std::min(a.NT, b.NT);
    const PAdicMeasure& lo = a.shift <= b.shift ? a : b;
    const PAdicMeasure& hi = a.shift <= b.shift ? b : a;
    PAdicMeasure up = measure_scale(hi, hi.shift - lo.shift >= a.M ? 0 : ipow(a.p, hi.shift - lo.shift));
    PAdicMeasure r = with_truncation(lo, NT);
    uint64_t q = r.modulus();
    for (size_t k = 0; k < r.branches.size(); ++k)
        for (int n = 0; n < NT; ++n) r.branches[k][n] = addm(r.branches[k][n], up.branches[k][n], q);
    return r;
}

PAdicMeasure measure_inverse(const PAdicMeasure& a) {
    uint64_t q = a.modulus();
    PAdicMeasure r = measure_zero(a.p, a.M, a.NT);
    for (size_t k = 0; k < a.branches.size(); ++k) {
        const auto& f = a.branches[k];
        if (f[0] % a.p == 0) domain_error("measure is not invertible: branch " + std::to_string(k) + " is not a unit");
        uint64_t inv0 = invmod(f[0], q);
        auto& g = r.branches[k];
        g[0] = inv0;
        for (int n = 1; n < a.NT; ++n) {
            unsigned __int128 acc = 0;
            for (int i = 1; i <= n; ++i) acc = (acc + static_cast<unsigned __int128>(f[i]) * g[n - i]) % q;
            g[n] = mulmod(neg(static_cast<uint64_t>(acc), q), inv0, q);
        }
    }
    r.shift = -a.shift;
    return r;
}

PAdicMeasure measure_scale(const PAdicMeasure& a, uint64_t unit, int shift) {
    PAdicMeasure r = a;
    uint64_t q = a.modulus();
    for (auto& br : r.branches)
        for (auto& x : br) x = mulmod(x, unit % q, q);
    r.shift += shift;
    return r;
}

PAdicMeasure measure_twist(const PAdicMeasure& a, long k) {
    long p = a.p;
    uint64_t q = a.modulus();
    uint64_t lin = one_plus_p_pow(p, k, q);
    uint64_t c0 = subm(lin, 1 % q, q);
    int NT = a.NT;
    if (c0 != 0) {
        int v = valuation_of(c0, p, a.M);
        NT = a.NT - (a.M + v - 1) / v + 1;
        if (NT < 1) domain_error("truncation too short to twist");
    }
    PAdicMeasure r = measure_zero(p, a.M, NT);
    std::vector<uint64_t> L(a.NT, 0);
    L[0] = c0;
    if (a.NT > 1) L[1] = lin;
    for (long b = 0; b < p - 1; ++b) {
        auto g = compose(a.branches[pmod(b + k, p - 1)], L, a.NT, q);
        g.resize(NT);
        r.branches[b] = g;
    }
    r.shift = a.shift;
    return r;
}

PAdicMeasure measure_invert_variable(const PAdicMeasure& a) {
    long p = a.p;
    uint64_t q = a.modulus();
    std::vector<uint64_t> U(a.NT, 0);
    for (int n = 1; n < a.NT; ++n) U[n] = n % 2 ? neg(1 % q, q) : 1 % q;
    PAdicMeasure r = measure_zero(p, a.M, a.NT);
    for (long b = 0; b < p - 1; ++b) r.branches[b] = compose(a.branches[pmod(-b, p - 1)], U, a.NT, q);
    r.shift = a.shift;
    return r;
}

void TwoVariableMeasure::add_term(PAdicMeasure a, PAdicMeasure b) {
    check_compatible(a, b);
    if (terms.empty()) {
        p = a.p;
        M = a.M;
        NT = std::min(a.NT, b.NT);
    } else {
        if (a.p != p || a.M != M) domain_error("tensor terms over different p or precision");
        NT = std::min({NT, a.NT, b.NT});
    }
    if (static_cast<int>(terms.size()) >= kMaxRank) domain_error("tensor rank exceeds 16");
    terms.emplace_back(std::move(a), std::move(b));
}

PAdicScalar measure_eval2(const TwoVariableMeasure& mu, const LocallyAlgebraicCharacter& chi1,
                          const LocallyAlgebraicCharacter& chi2) {
    PAdicScalar acc{mu.p, mu.M, 0, 0};
    for (const auto& [a, b] : mu.terms) acc = acc + measure_eval(a, chi1) * measure_eval(b, chi2);
    return acc;
}

PAdicMeasure eisenstein_reindex(const TwoVariableMeasure& mu, long t) {
    if (t % 2 != 0) domain_error("reindexing needs even t");
    if (static_cast<int>(mu.terms.size()) > TwoVariableMeasure::kMaxRank) domain_error("tensor rank exceeds 16");
    if (mu.terms.empty()) domain_error("empty tensor");
    long h = t / 2;
    std::optional<PAdicMeasure> acc;
    for (const auto& [a, b] : mu.terms) {
        PAdicMeasure term = measure_mul(measure_invert_variable(measure_twist(a, h)), measure_twist(b, h - 1));
        acc = acc ? measure_add(*acc, term) : term;
    }
    return *acc;
}

PAdicMeasure correction_unit(const PAdicInt& sqrtD, int k1, int k2, int M, int NT) {
    long p = sqrtD.prime();
    if ((k1 + k2) % 2 != 0) domain_error("weights must be paritious");
    if (!sqrtD.is_unit()) domain_error("sqrt(D) must be a p-adic unit");
    long w = (k1 + k2) / 2;
    PAdicInt u = -sqrtD.inverse();
    PAdicMeasure d = measure_dirac(u, M, NT);
    uint64_t q = d.modulus();
    PAdicInt r(p, M, sqrtD.residue() % q);
    uint64_t scalar = mulmod(static_cast<uint64_t>(p + 1) % q, r.pow(1 - w).residue(), q);
    return measure_scale(d, scalar, -1);
}

std::vector<Moment> measure_moments(const PAdicMeasure& mu, const std::vector<LocallyAlgebraicCharacter>& chars) {
    if (mu.shift != 0) domain_error("moments need shift 0");
    std::vector<Moment> out;
    out.reserve(chars.size());
    for (const auto& c : chars) out.push_back({c, measure_eval(mu, c).residue});
    return out;
}

std::vector<LocallyAlgebraicCharacter> standard_characters(long p, int M, int extra) {
    std::vector<LocallyAlgebraicCharacter> out;
    for (long b = 0; b < p - 1; ++b)
        for (long s = 0; s < M + extra; ++s) out.push_back({s, pmod(b - s, p - 1), 0});
    return out;
}

namespace {

struct LinearSolve {
    std::optional<std::vector<uint64_t>> x;
    int kernel_length = 0;
};

// A x = b over Z/p^M through a Smith form
LinearSolve solve_mod_pM(std::vector<std::vector<uint64_t>> A, std::vector<uint64_t> b, size_t cols, long p, int M) {
    uint64_t q = ipow(p, M);
    size_t rows = A.size();
    std::vector<std::vector<uint64_t>> V(cols, std::vector<uint64_t>(cols, 0));
    for (size_t i = 0; i < cols; ++i) V[i][i] = 1 % q;
    std::vector<int> e(cols, M);
    size_t rank = 0;
    for (size_t k = 0; k < std::min(rows, cols); ++k) {
        int best = M;
        size_t bi = k, bj = k;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j) {
                int v = valuation_of(A[i][j], p, M);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == M) break;
        std::swap(A[k], A[bi]);
        std::swap(b[k], b[bi]);
        if (bj != k) {
            for (auto& row : A) std::swap(row[k], row[bj]);
            for (auto& row : V) std::swap(row[k], row[bj]);
        }
        uint64_t pe = ipow(p, best);
        uint64_t uinv = invmod((A[k][k] / pe) % q, q);
        for (size_t i = k + 1; i < rows; ++i) {
            if (A[i][k] == 0) continue;
            uint64_t f = mulmod(A[i][k] / pe, uinv, q);
            for (size_t j = k; j < cols; ++j) A[i][j] = subm(A[i][j], mulmod(f, A[k][j], q), q);
            b[i] = subm(b[i], mulmod(f, b[k], q), q);
        }
        for (size_t j = k + 1; j < cols; ++j) {
            if (A[k][j] == 0) continue;
            uint64_t f = mulmod(A[k][j] / pe, uinv, q);
            for (size_t i = k; i < rows; ++i) A[i][j] = subm(A[i][j], mulmod(f, A[i][k], q), q);
            for (size_t i = 0; i < cols; ++i) V[i][j] = subm(V[i][j], mulmod(f, V[i][k], q), q);
        }
        e[k] = best;
        rank = k + 1;
    }
    LinearSolve out;
    for (int v : e) out.kernel_length += v;
    std::vector<uint64_t> y(cols, 0);
    for (size_t k = 0; k < rows; ++k) {
        if (k < rank) {
            uint64_t pe = ipow(p, e[k]);
            if (b[k] % pe != 0) return out;
            uint64_t u = (A[k][k] / pe) % q;
            uint64_t qk = ipow(p, M - e[k]);
            y[k] = mulmod((b[k] / pe) % qk, invmod(u % qk, qk), qk);
        } else if (b[k] != 0) {
            return out;
        }
    }
    std::vector<uint64_t> x(cols, 0);
    for (size_t i = 0; i < cols; ++i)
        for (size_t k = 0; k < cols; ++k) x[i] = addm(x[i], mulmod(V[i][k], y[k], q), q);
    out.x = x;
    return out;
}

}  // namespace

FitResult fit_measure(const std::vector<Moment>& moments, long p, int M, int NT) {
    FitResult res;
    res.measure = measure_zero(p, M, NT);
    uint64_t q = res.measure.modulus();
    size_t cols = static_cast<size_t>(std::min(NT, M));
    std::vector<std::vector<size_t>> by_branch(p - 1);
    for (size_t i = 0; i < moments.size(); ++i) {
        const auto& c = moments[i].chi;
        if (pmod(c.c, p) != 0) domain_error("fit needs characters of conductor at most p");
        if (moments[i].value >= q) fail(ErrorKind::Schema, "moment value out of range");
        by_branch[pmod(c.s + c.j, p - 1)].push_back(i);
    }
    auto system = [&](const std::vector<size_t>& idx, size_t skip) {
        std::vector<std::vector<uint64_t>> A;
        std::vector<uint64_t> b;
        for (size_t i : idx) {
            if (i == skip) continue;
            uint64_t T = subm(one_plus_p_pow(p, moments[i].chi.s, q), 1 % q, q);
            std::vector<uint64_t> row(cols);
            uint64_t x = 1 % q;
            for (size_t n = 0; n < cols; ++n) {
                row[n] = x;
                x = mulmod(x, T, q);
            }
            A.push_back(row);
            b.push_back(moments[i].value);
        }
        return solve_mod_pM(A, b, cols, p, M);
    };
    for (long br = 0; br < p - 1; ++br) {
        LinearSolve s = system(by_branch[br], moments.size());
        res.kernel_length += s.kernel_length;
        if (s.x) {
            std::copy(s.x->begin(), s.x->end(), res.measure.branches[br].begin());
            continue;
        }
        res.consistent = false;
        for (size_t i : by_branch[br])
            if (system(by_branch[br], i).x) res.suspects.push_back(i);
    }
    if (!res.consistent)
        res.flag = "inconsistent moments";
    else if (res.kernel_length > 0)
        res.flag = "non-unique (kernel dimension " + std::to_string(res.kernel_length) + ")";
    else
        res.flag = "unique";
    return res;
}

uint64_t PAdicMatrix::modulus() const { return ipow(p, M); }

PAdicMatrix PAdicMatrix::identity(long p, int M, int n) {
    PAdicMatrix m{p, M, n, std::vector<uint64_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % m.modulus();
    return m;
}

PAdicMatrix operator*(const PAdicMatrix& x, const PAdicMatrix& y) {
    if (x.p != y.p || x.M != y.M || x.n != y.n) domain_error("matrix shapes differ");
    uint64_t q = x.modulus();
    PAdicMatrix r{x.p, x.M, x.n, std::vector<uint64_t>(x.a.size(), 0)};
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            unsigned __int128 acc = 0;
            for (int k = 0; k < x.n; ++k) acc = (acc + static_cast<unsigned __int128>(x.at(i, k)) * y.at(k, j)) % q;
            r.at(i, j) = static_cast<uint64_t>(acc);
        }
    return r;
}

PAdicMatrix matrix_pow(const PAdicMatrix& x, uint64_t e) {
    PAdicMatrix r = PAdicMatrix::identity(x.p, x.M, x.n), b = x;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Projector ordinary_projector(const PAdicMatrix& A) {
    PAdicMatrix B = A;
    for (int k = 1; k <= 100000; ++k) {
        if (k > 1) B = matrix_pow(B, static_cast<uint64_t>(k));
        if (B * B == B) return {B, k};
    }
    fail(ErrorKind::Identity, "ordinary projector did not stabilize");
}

std::string serialize_measure(const PAdicMeasure& mu) {
    std::ostringstream o;
    o << "padic-measure v1 " << mu.p << ' ' << mu.M << ' ' << mu.NT << ' ' << mu.shift << '\n';
    for (const auto& br : mu.branches) {
        for (size_t n = 0; n < br.size(); ++n) o << (n ? " " : "") << br[n];
        o << '\n';
    }
    return o.str();
}

namespace {

void expect_token(std::istream& in, const std::string& want) {
    std::string tok;
    if (!(in >> tok) || tok != want) fail(ErrorKind::Schema, "expected '" + want + "'");
}

template <class T>
T read_value(std::istream& in, const char* what) {
    T v{};
    if (!(in >> v)) fail(ErrorKind::Schema, std::string("cannot read ") + what);
    return v;
}

PAdicMeasure read_measure(std::istream& in) {
    expect_token(in, "padic-measure");
    expect_token(in, "v1");
    long p = read_value<long>(in, "p");
    int M = read_value<int>(in, "M");
    int NT = read_value<int>(in, "N_T");
    int shift = read_value<int>(in, "shift");
    if (p < 3 || M < 1 || NT < 1 || NT > 100000) fail(ErrorKind::Schema, "bad measure header");
    PAdicMeasure mu = measure_zero(p, M, NT);
    mu.shift = shift;
    uint64_t q = mu.modulus();
    for (auto& br : mu.branches)
        for (auto& x : br) {
            x = read_value<uint64_t>(in, "coefficient");
            if (x >= q) fail(ErrorKind::Schema, "coefficient out of range");
        }
    return mu;
}

void expect_end(std::istream& in) {
    std::string rest;
    if (in >> rest) fail(ErrorKind::Schema, "trailing data");
}

}  // namespace

PAdicMeasure parse_measure(const std::string& text) {
    std::istringstream in(text);
    PAdicMeasure mu = read_measure(in);
    expect_end(in);
    return mu;
}

std::string serialize_tensor(const TwoVariableMeasure& mu) {
    std::ostringstream o;
    o << "padic-tensor v1 " << mu.p << ' ' << mu.M << ' ' << mu.NT << ' ' << mu.terms.size() << '\n';
    for (const auto& [a, b] : mu.terms) o << serialize_measure(a) << serialize_measure(b);
    return o.str();
}

TwoVariableMeasure parse_tensor(const std::string& text) {
    std::istringstream in(text);
    expect_token(in, "padic-tensor");
    expect_token(in, "v1");
    long p = read_value<long>(in, "p");
    int M = read_value<int>(in, "M");
    read_value<int>(in, "N_T");
    int R = read_value<int>(in, "rank");
    if (R < 1 || R > TwoVariableMeasure::kMaxRank) fail(ErrorKind::Schema, "tensor rank must be 1..16");
    TwoVariableMeasure mu;
    for (int i = 0; i < R; ++i) {
        PAdicMeasure a = read_measure(in);
        PAdicMeasure b = read_measure(in);
        if (a.p != p || a.M != M || b.p != p || b.M != M) fail(ErrorKind::Schema, "tensor term header mismatch");
        mu.add_term(std::move(a), std::move(b));
    }
    expect_end(in);
    return mu;
}

std::string serialize_moments(long p, int M, int NT, const std::vector<Moment>& moments) {
    std::ostringstream o;
    o << "padic-moments v1 " << p << ' ' << M << ' ' << NT << ' ' << moments.size() << '\n';
    for (const auto& m : moments) o << m.chi.s << ' ' << m.chi.j << ' ' << m.chi.c << ' ' << m.value << '\n';
    return o.str();
}

MomentFile parse_moments(const std::string& text) {
    std::istringstream in(text);
    expect_token(in, "padic-moments");
    expect_token(in, "v1");
    MomentFile f;
    f.p = read_value<long>(in, "p");
    f.M = read_value<int>(in, "M");
    f.NT = read_value<int>(in, "N_T");
    long count = read_value<long>(in, "count");
    if (f.p < 3 || f.M < 1 || f.NT < 1 || count < 0 || count > 1000000) fail(ErrorKind::Schema, "bad moments header");
    for (long i = 0; i < count; ++i) {
        Moment m;
        m.chi.s = read_value<long>(in, "s");
        m.chi.j = read_value<long>(in, "j");
        m.chi.c = read_value<long>(in, "c");
        m.value = read_value<uint64_t>(in, "value");
        f.moments.push_back(m);
    }
    expect_end(in);
    return f;
}

}  // namespace asai
