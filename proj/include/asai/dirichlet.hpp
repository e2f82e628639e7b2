#pragma once

#include <complex>
#include <string>
#include <vector>

#include "asai/cyclotomic.hpp"

namespace asai {

struct Generator {
    long g;      // element of (Z/N)^x
    long order;  // its order
};

// Generators of (Z/N)^x: one per odd prime power (a primitive root lifted to be 1 elsewhere),
// and -1, 5 for the 2-part.
std::vector<Generator> standard_generators(long N);

// Character of (Z/N)^x with values zeta_m^{e(a)}.
class DirichletCharacter {
public:
    DirichletCharacter() : DirichletCharacter(trivial(1)) {}
    // Values on standard_generators(N), given as exponents of zeta_m.
    DirichletCharacter(long N, long m, const std::vector<long>& gen_exponents);
    static DirichletCharacter trivial(long N);
    // Values given as cyclotomic roots of unity on standard_generators(N).
    static DirichletCharacter from_values(long N, const std::vector<Cyclotomic>& values);
    static DirichletCharacter legendre(long p);
    // omega^j modulo p, with omega the Teichmuller character, realized with values zeta_{p-1}^{j*log}.
    static DirichletCharacter teichmuller_power(long p, long j);

    long modulus() const { return N_; }
    long root_order() const { return m_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == N_; }
    bool is_trivial() const;
    const std::vector<long>& generator_exponents() const { return gen_exp_; }

    // -1 if gcd(a, N) > 1.
    long exponent(long a) const;
    Cyclotomic value(long a) const;
    std::complex<double> value_complex(long a) const;
    Rational value_rational(long a) const;  // requires a rational value
    DirichletCharacter conj() const;
    long order() const;
    std::string str() const;

private:
    long N_ = 1;
    long m_ = 1;
    long conductor_ = 1;
    std::vector<long> gen_exp_;
    std::vector<long> table_;
};

Cyclotomic gauss_sum(const DirichletCharacter& nu);

}  // namespace asai
