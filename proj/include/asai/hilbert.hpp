#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "asai/dirichlet.hpp"
#include "asai/padic.hpp"
#include "asai/series.hpp"
#include "asai/value.hpp"

namespace asai {

enum class Splitting { Split, Inert, Ramified };

std::string splitting_name(Splitting s);
bool is_fundamental_discriminant(long D);
Splitting prime_splitting(long D, long ell);

struct PrimeIdeal {
    long ell = 0;
    int index = 1;
    auto operator<=>(const PrimeIdeal&) const = default;
};

struct HilbertEigenform {
    std::string label;
    std::string source;
    long D = 5;
    int k1 = 2, k2 = 2;
    long level_norm = 1;
    long coverage_bound = 0;
    DirichletCharacter chi_rational;
    Domain domain = Domain::Rational;
    int cyclotomic_order = 1;
    std::map<PrimeIdeal, Value> eigenvalues;
    std::map<PrimeIdeal, Value> chi_on_primes;

    Splitting splitting(long ell) const { return prime_splitting(D, ell); }
    std::vector<PrimeIdeal> primes_over(long ell) const;
    long norm(const PrimeIdeal& P) const;
    bool has(const PrimeIdeal& P) const { return eigenvalues.count(P) > 0; }
    // Prime ideals dividing the level carry chi = 0 in the table.
    bool divides_level(const PrimeIdeal& P) const;
    bool ramified_at(long ell) const;

    template <class R>
    R eigenvalue(const PrimeIdeal& P) const {
        return value_as<R>(lookup(eigenvalues, P, "eigenvalue"));
    }
    template <class R>
    R chi(const PrimeIdeal& P) const {
        return value_as<R>(lookup(chi_on_primes, P, "character value"));
    }
    // chi_Q(ell) promoted into R.
    template <class R>
    R chi_rational_at(long ell) const {
        return value_as<R>(Value(chi_rational.value(ell)));
    }

private:
    const Value& lookup(const std::map<PrimeIdeal, Value>& m, const PrimeIdeal& P, const char* what) const;
};

HilbertEigenform ingest_fixture(const std::string& document);
HilbertEigenform ingest_fixture_file(const std::string& path);

// a_{P^0} = 1, a_{P^1} = a, a_{P^{r+1}} = a a_{P^r} - chi a_{P^{r-1}}
template <class R>
R hecke_prime_power(const R& a, const R& chi, int r) {
    if (r < 0) domain_error("negative exponent");
    R prev(0), cur(1);
    for (int i = 0; i < r; ++i) {
        R next = a * cur - chi * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Elements x + y sqrt(disc) over R.
template <class R>
struct QuadraticExt {
    R x, y, disc;
    friend QuadraticExt operator+(const QuadraticExt& a, const QuadraticExt& b) {
        return {a.x + b.x, a.y + b.y, a.disc};
    }
    friend QuadraticExt operator*(const QuadraticExt& a, const QuadraticExt& b) {
        return {a.x * b.x + a.y * b.y * a.disc, a.x * b.y + a.y * b.x, a.disc};
    }
    bool in_base() const { return is_zero(y); }
};

// Roots of X^2 - a X + chi. Exact when the discriminant has a root in the domain or in a
// cyclotomic field; otherwise represented as a/2 +- (1/2) sqrt(disc).
struct SatakePair {
    bool symbolic = false;
    Value alpha, beta;
    Value half_trace, disc;

    Value sum() const;
    Value product() const;
    std::string str() const;
};

SatakePair satake(const Value& a, const Value& chi);

struct Stabilization {
    PAdicInt alpha;
    PAdicInt beta;
};

// Unit root of X^2 - a X + chi p^{k1-1}, Hensel-lifted mod p^M.
Stabilization p_stabilize(const Rational& a, const Rational& chi, long p, int k1, int M);

long smallest_prime_factor(long n);
std::vector<std::pair<long, int>> factorize(long n);

// Dirichlet coefficients of L(chi_Q, 2s) * sum a_{nO} n^-s for n <= n_max whose prime factors are <= smooth_bound.
template <class R>
std::map<long, R> asai_dirichlet_coefficients(const HilbertEigenform& form, long n_max, long smooth_bound = 0);

void check_coverage(const HilbertEigenform& form, long n_max, long smooth_bound);

extern template std::map<long, Rational> asai_dirichlet_coefficients<Rational>(const HilbertEigenform&, long, long);
extern template std::map<long, Cyclotomic> asai_dirichlet_coefficients<Cyclotomic>(const HilbertEigenform&, long, long);
extern template std::map<long, MPoly> asai_dirichlet_coefficients<MPoly>(const HilbertEigenform&, long, long);

}  // namespace asai
