#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "asai/dirichlet.hpp"
#include "asai/padic.hpp"

namespace asai {

// residue * p^shift, the residue taken modulo p^M.
struct PAdicScalar {
    long p = 0;
    int M = 0;
    uint64_t residue = 0;
    int shift = 0;

    std::string str() const;
    friend bool operator==(const PAdicScalar&, const PAdicScalar&) = default;
};

PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b);
PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b);

// x |-> nu(x) x^s with nu = omega^j psi, omega the Teichmuller character and psi(1+p) = zeta_p^c.
// omega is pinned by omega(g) <-> zeta_{p-1} for g the least primitive root mod p.
struct LocallyAlgebraicCharacter {
    long s = 0;
    long j = 0;
    long c = 0;

    static LocallyAlgebraicCharacter power(long s) { return {s, 0, 0}; }
    std::string str() const;
    friend bool operator==(const LocallyAlgebraicCharacter&, const LocallyAlgebraicCharacter&) = default;
};

// nu of modulus 1, p or p^2.
LocallyAlgebraicCharacter character_from_dirichlet(const DirichletCharacter& nu, long s, long p);

// Teichmuller lift of u modulo p^M.
uint64_t teichmuller(uint64_t u, long p, int M);

// Element of Z_p[[Z_p^x]] modulo p^M: branch b holds the T-expansion (length N_T) of its omega^b component,
// with 1 + p <-> 1 + T. The value is p^shift times the stored one.
struct PAdicMeasure {
    long p = 3;
    int M = 1;
    int NT = 1;
    int shift = 0;
    std::vector<std::vector<uint64_t>> branches;

    uint64_t modulus() const;
    int branch_count() const { return static_cast<int>(p - 1); }
    friend bool operator==(const PAdicMeasure&, const PAdicMeasure&) = default;
};

PAdicMeasure measure_zero(long p, int M, int NT);
PAdicMeasure measure_one(long p, int M, int NT);
PAdicMeasure measure_random(std::mt19937_64& rng, long p, int M, int NT);

// p-adic precision of u needed to build an exact Dirac measure at (M, N_T).
int dirac_precision(long p, int M, int NT);
PAdicMeasure measure_dirac(const PAdicInt& u, int M, int NT);
PAdicMeasure measure_dirac(const Integer& u, long p, int M, int NT);

PAdicScalar measure_eval(const PAdicMeasure& mu, const LocallyAlgebraicCharacter& chi);
// Value in (Z/p^M)[zeta_p] on the basis 1, zeta, ..., zeta^{p-2}; handles conductor p^2.
std::vector<uint64_t> measure_eval_extended(const PAdicMeasure& mu, const LocallyAlgebraicCharacter& chi);

PAdicMeasure measure_mul(const PAdicMeasure& a, const PAdicMeasure& b);
PAdicMeasure measure_add(const PAdicMeasure& a, const PAdicMeasure& b);
PAdicMeasure measure_inverse(const PAdicMeasure& a);
PAdicMeasure measure_scale(const PAdicMeasure& a, uint64_t unit, int shift = 0);
// x^k mu; coefficients that are no longer known mod p^M are cut, shortening N_T.
PAdicMeasure measure_twist(const PAdicMeasure& a, long k);
// pushforward under x |-> x^{-1}
PAdicMeasure measure_invert_variable(const PAdicMeasure& a);

struct TwoVariableMeasure {
    static constexpr int kMaxRank = 16;
    long p = 3;
    int M = 1;
    int NT = 1;
    std::vector<std::pair<PAdicMeasure, PAdicMeasure>> terms;

    void add_term(PAdicMeasure a, PAdicMeasure b);
    friend bool operator==(const TwoVariableMeasure&, const TwoVariableMeasure&) = default;
};

PAdicScalar measure_eval2(const TwoVariableMeasure& mu, const LocallyAlgebraicCharacter& chi1,
                          const LocallyAlgebraicCharacter& chi2);

// Pushforward along kappa |-> (t/2 - kappa, kappa + t/2 - 1).
PAdicMeasure eisenstein_reindex(const TwoVariableMeasure& mu, long t);

// (p+1)/p (sqrt D)^{1 - (k1+k2)/2} [sqrt D]^{-1} [-1]; sqrtD must carry dirac_precision(p, M, NT) digits.
PAdicMeasure correction_unit(const PAdicInt& sqrtD, int k1, int k2, int M, int NT);

struct Moment {
    LocallyAlgebraicCharacter chi;
    uint64_t value = 0;
};

std::vector<Moment> measure_moments(const PAdicMeasure& mu, const std::vector<LocallyAlgebraicCharacter>& chars);

// For every branch b, x^s omega^{b-s} for s = 0 .. M + extra - 1: enough to pin every evaluation mod p^M.
std::vector<LocallyAlgebraicCharacter> standard_characters(long p, int M, int extra = 2);

struct FitResult {
    bool consistent = true;
    PAdicMeasure measure;
    // log_p of the size of the solution set modulo p^M
    int kernel_length = 0;
    std::string flag;
    std::vector<size_t> suspects;  // moments whose removal restores consistency
};

FitResult fit_measure(const std::vector<Moment>& moments, long p, int M, int NT);

struct PAdicMatrix {
    long p = 3;
    int M = 1;
    int n = 0;
    std::vector<uint64_t> a;  // row major

    uint64_t modulus() const;
    uint64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    uint64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    static PAdicMatrix identity(long p, int M, int n);
    friend bool operator==(const PAdicMatrix&, const PAdicMatrix&) = default;
};

PAdicMatrix operator*(const PAdicMatrix& x, const PAdicMatrix& y);
PAdicMatrix matrix_pow(const PAdicMatrix& x, uint64_t e);

struct Projector {
    PAdicMatrix e;
    int steps = 0;  // the limit is A^{steps!}
};

Projector ordinary_projector(const PAdicMatrix& A);

std::string serialize_measure(const PAdicMeasure& mu);
PAdicMeasure parse_measure(const std::string& text);
std::string serialize_tensor(const TwoVariableMeasure& mu);
TwoVariableMeasure parse_tensor(const std::string& text);
std::string serialize_moments(long p, int M, int NT, const std::vector<Moment>& moments);
struct MomentFile {
    long p = 3;
    int M = 1;
    int NT = 1;
    std::vector<Moment> moments;
};
MomentFile parse_moments(const std::string& text);

}  // namespace asai
