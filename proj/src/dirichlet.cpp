#include "asai/dirichlet.hpp"

#include <sstream>

namespace asai {

namespace {

std::vector<std::pair<long, int>> factor(long n) {
    std::vector<std::pair<long, int>> f;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        f.push_back({d, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

long mult_order(long a, long n) {
    long k = 1, x = a % n;
    while (x != 1 % n) {
        x = x * a % n;
        ++k;
    }
    return k;
}

// x = a mod q, x = 1 mod r (gcd(q, r) = 1)
long crt_one(long a, long q, long r) {
    if (r == 1) return a % q;
    for (long x = a % q; x < q * r; x += q)
        if (x % r == 1 % r) return x;
    return -1;
}

}  // namespace

std::vector<Generator> standard_generators(long N) {
    if (N < 1) domain_error("modulus must be positive");
    std::vector<Generator> gens;
    for (auto [l, e] : factor(N)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= l;
        long rest = N / q;
        if (l == 2) {
            if (e >= 2) gens.push_back({crt_one(q - 1, q, rest), 2});
            if (e >= 3) gens.push_back({crt_one(5, q, rest), q / 4});
            continue;
        }
        long phi = q / l * (l - 1);
        long g = 2;
        while (mult_order(g, q) != phi || g % l == 0) ++g;
        gens.push_back({crt_one(g, q, rest), phi});
    }
    return gens;
}

DirichletCharacter::DirichletCharacter(long N, long m, const std::vector<long>& gen_exponents)
    : N_(N), m_(m), gen_exp_(gen_exponents) {
    auto gens = standard_generators(N);
    if (gens.size() != gen_exp_.size()) fail(ErrorKind::Schema, "generator value count mismatch");
    for (size_t i = 0; i < gens.size(); ++i) {
        gen_exp_[i] = ((gen_exp_[i] % m) + m) % m;
        if (gen_exp_[i] * gens[i].order % m != 0)
            fail(ErrorKind::Schema, "generator value order mismatch at generator " + std::to_string(gens[i].g));
    }
    table_.assign(N, -1);
    // Enumerate all products of generator powers.
    std::vector<long> k(gens.size(), 0);
    while (true) {
        long x = 1 % N, e = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            x = static_cast<long>(static_cast<__int128>(x) * mod_pow(gens[i].g, k[i], N) % N);
            e = (e + gen_exp_[i] * k[i]) % m;
        }
        table_[x] = e;
        size_t i = 0;
        while (i < gens.size() && ++k[i] == gens[i].order) k[i++] = 0;
        if (i == gens.size()) break;
    }
    conductor_ = N;
    for (long d = 1; d < N; ++d) {
        if (N % d) continue;
        bool trivial_on_kernel = true;
        for (long x = 1; x < N && trivial_on_kernel; x += d)
            if (table_[x] > 0) trivial_on_kernel = false;
        if (trivial_on_kernel) {
            conductor_ = d;
            break;
        }
    }
}

DirichletCharacter DirichletCharacter::trivial(long N) {
    return DirichletCharacter(N, 1, std::vector<long>(standard_generators(N).size(), 0));
}

DirichletCharacter DirichletCharacter::from_values(long N, const std::vector<Cyclotomic>& values) {
    std::vector<std::pair<long, long>> roots;  // (order L, exponent k) with value = zeta_L^k
    long m = 1;
    for (const auto& v : values) {
        long L = lcm_long(2, v.order());
        long found = -1;
        for (long k = 0; k < L && found < 0; ++k)
            if (v == Cyclotomic::zeta(static_cast<int>(L), k)) found = k;
        if (found < 0) fail(ErrorKind::Schema, "character value " + v.str() + " is not a root of unity");
        roots.push_back({L, found});
        m = lcm_long(m, L);
    }
    std::vector<long> e;
    for (auto [L, k] : roots) e.push_back(k * (m / L));
    // Shrink m to the actual order of the values.
    long g = m;
    for (long x : e) g = gcd_long(g, x);
    if (g > 1 && g < m) {
        for (auto& x : e) x /= g;
        m /= g;
    } else if (g == m) {
        for (auto& x : e) x = 0;
        m = 1;
    }
    return DirichletCharacter(N, m, e);
}

DirichletCharacter DirichletCharacter::legendre(long p) {
    return DirichletCharacter(p, 2, {1});
}

DirichletCharacter DirichletCharacter::teichmuller_power(long p, long j) {
    return DirichletCharacter(p, p - 1, {j});
}

bool DirichletCharacter::is_trivial() const {
    for (long e : gen_exp_)
        if (e != 0) return false;
    return true;
}

long DirichletCharacter::exponent(long a) const {
    long r = ((a % N_) + N_) % N_;
    return table_[r];
}

Cyclotomic DirichletCharacter::value(long a) const {
    long e = exponent(a);
    if (e < 0) return Cyclotomic(Rational(0), static_cast<int>(m_));
    return Cyclotomic::zeta(static_cast<int>(m_), e);
}

std::complex<double> DirichletCharacter::value_complex(long a) const {
    long e = exponent(a);
    if (e < 0) return 0;
    return std::polar(1.0, 2.0 * std::acos(-1.0) * static_cast<double>(e) / static_cast<double>(m_));
}

Rational DirichletCharacter::value_rational(long a) const {
    long e = exponent(a);
    if (e < 0) return 0;
    if (e == 0) return 1;
    if (2 * e == m_) return -1;
    domain_error("character value is not rational");
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<long> e;
    for (long x : gen_exp_) e.push_back((m_ - x) % m_);
    return DirichletCharacter(N_, m_, e);
}

long DirichletCharacter::order() const {
    long g = m_;
    for (long x : gen_exp_) g = gcd_long(g, x);
    return m_ / g;
}

std::string DirichletCharacter::str() const {
    std::ostringstream os;
    os << "chi mod " << N_ << " [";
    auto gens = standard_generators(N_);
    for (size_t i = 0; i < gens.size(); ++i)
        os << (i ? ", " : "") << gens[i].g << " -> zeta_" << m_ << "^" << gen_exp_[i];
    os << "]";
    return os.str();
}

Cyclotomic gauss_sum(const DirichletCharacter& nu) {
    if (!nu.is_primitive() || nu.modulus() < 2) domain_error("gauss sum requires primitive character");
    const long N = nu.modulus(), m = nu.root_order();
    const long L = lcm_long(m, N);
    std::vector<Rational> e(L, Rational(0));
    for (long a = 1; a < N; ++a) {
        long k = nu.exponent(a);
        if (k < 0) continue;
        e[(k * (L / m) + a * (L / N)) % L] += 1;
    }
    return Cyclotomic::from_exponents(static_cast<int>(L), e);
}

}  // namespace asai
