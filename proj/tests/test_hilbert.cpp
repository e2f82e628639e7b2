#include <doctest.h>

#include <random>

#include "asai/hilbert.hpp"

using namespace asai;

namespace {

const std::string kFixtures = ASAI_FIXTURE_DIR;

const HilbertEigenform& dihedral() {
    static HilbertEigenform f = ingest_fixture_file(kFixtures + "/bc_dihedral_23_q5.json");
    return f;
}

const HilbertEigenform& symbolic() {
    static HilbertEigenform f = ingest_fixture_file(kFixtures + "/symbolic_d5_w53.json");
    return f;
}

std::string error_text(const std::string& path) {
    try {
        ingest_fixture_file(path);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("prime splitting in Q(sqrt 5)") {
    CHECK(prime_splitting(5, 5) == Splitting::Ramified);
    CHECK(prime_splitting(5, 11) == Splitting::Split);
    CHECK(prime_splitting(5, 2) == Splitting::Inert);
    CHECK(prime_splitting(5, 3) == Splitting::Inert);
    CHECK(prime_splitting(8, 2) == Splitting::Ramified);
    CHECK(prime_splitting(8, 7) == Splitting::Split);
    CHECK(prime_splitting(12, 11) == Splitting::Split);
    CHECK_THROWS_WITH_AS(prime_splitting(20, 3), doctest::Contains("invalid discriminant"), Error);
    CHECK_THROWS_WITH_AS(prime_splitting(9, 3), doctest::Contains("invalid discriminant"), Error);
}

TEST_CASE("hecke prime powers") {
    CHECK(hecke_prime_power(Rational(7), Rational(3), 0) == 1);
    CHECK(hecke_prime_power(Rational(2), Rational(1), 2) == 3);
    MPoly a = MPoly::var("a"), c = MPoly::var("chi");
    CHECK(hecke_prime_power(a, c, 3) == a * a * a - MPoly(2) * c * a);
}

TEST_CASE("hecke generating function") {
    MPoly a = MPoly::var("a"), c = MPoly::var("chi");
    auto rf = RationalFunction<MPoly>(Polynomial<MPoly>(MPoly(1)), Polynomial<MPoly>({MPoly(1), -a, c}));
    auto s = expand_rational_function(rf, 12);
    for (int r = 0; r < 12; ++r) CHECK(s[r] == hecke_prime_power(a, c, r));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int t = 0; t < 20; ++t) {
        Rational x = make_rational(d(rng), 1 + (d(rng) + 7) % 5), y = make_rational(d(rng), 3);
        auto sr = expand_rational_function(
            RationalFunction<Rational>(Polynomial<Rational>(Rational(1)), Polynomial<Rational>({Rational(1), -x, y})),
            12);
        for (int r = 0; r < 12; ++r) CHECK(sr[r] == hecke_prime_power(x, y, r));
    }
}

TEST_CASE("satake parameters") {
    auto s = satake(Value(Rational(2)), Value(Rational(1)));
    CHECK_FALSE(s.symbolic);
    CHECK(std::get<Rational>(s.alpha) == 1);
    CHECK(std::get<Rational>(s.beta) == 1);

    auto i = satake(Value(Rational(0)), Value(Rational(1)));
    CHECK_FALSE(i.symbolic);
    Cyclotomic z4 = Cyclotomic::zeta(4);
    Cyclotomic ia = value_as<Cyclotomic>(i.alpha), ib = value_as<Cyclotomic>(i.beta);
    CHECK(((ia == z4 && ib == -z4) || (ia == -z4 && ib == z4)));

    auto six = satake(Value(Rational(1)), Value(Rational(1)));
    Cyclotomic a6 = value_as<Cyclotomic>(six.alpha), b6 = value_as<Cyclotomic>(six.beta);
    CHECK(a6 * a6 * a6 == Cyclotomic(-1));
    CHECK(b6 * b6 * b6 == Cyclotomic(-1));
    CHECK_FALSE(a6 == b6);
    CHECK(a6.embed().real() == doctest::Approx(0.5));

    MPoly a = MPoly::var("a");
    auto sym = satake(Value(a), Value(Rational(1)));
    CHECK(sym.symbolic);
    CHECK(std::get<MPoly>(sym.sum()) == a);
    CHECK(std::get<MPoly>(sym.product()) == MPoly(1));
}

TEST_CASE("satake recombination on random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 40; ++t) {
        Rational a = make_rational(d(rng), 1 + (d(rng) + 9) % 4);
        Rational c = make_rational(d(rng) == 0 ? 1 : d(rng), 1 + (d(rng) + 9) % 3);
        if (c == 0) c = 1;
        auto s = satake(Value(a), Value(c));
        CHECK(value_as<Cyclotomic>(s.sum()) == Cyclotomic(a));
        CHECK(value_as<Cyclotomic>(s.product()) == Cyclotomic(c));
    }
    MPoly x = MPoly::var("x"), y = MPoly::var("y");
    auto s = satake(Value(x * y), Value(y));
    CHECK(std::get<MPoly>(s.sum()) == x * y);
    CHECK(std::get<MPoly>(s.product()) == y);
}

TEST_CASE("p-stabilization") {
    auto s = p_stabilize(Rational(3), Rational(1), 5, 2, 4);
    CHECK(s.alpha.residue() == 218);
    CHECK(s.alpha.residue() % 5 == 3);
    CHECK((s.alpha * s.beta).residue() == 5);
    CHECK((s.alpha + s.beta).residue() == 3);
    CHECK(s.beta.valuation().value() == 1);

    CHECK_THROWS_WITH_AS(p_stabilize(Rational(5), Rational(1), 5, 2, 4), doctest::Contains("non-ordinary"), Error);

    auto t = p_stabilize(Rational(6), Rational(1), 5, 2, 3);
    CHECK(t.alpha.residue() == 1);
    CHECK(t.alpha.residue() % 5 == 1);

    std::mt19937_64 rng(5);
    for (long p : {3L, 5L, 7L, 11L}) {
        for (int k1 : {2, 3, 5}) {
            for (int trial = 0; trial < 10; ++trial) {
                long a = std::uniform_int_distribution<long>(1, 500)(rng);
                if (a % p == 0) continue;
                auto st = p_stabilize(Rational(a), Rational(1), p, k1, 5);
                PAdicInt A = PAdicInt::from_integer(a, p, 5);
                PAdicInt c(p, 5, ipow(static_cast<uint64_t>(p), k1 - 1));
                CHECK((st.alpha + st.beta) == A);
                CHECK((st.alpha * st.beta) == c);
                CHECK(st.alpha.is_unit());
                CHECK(st.beta.valuation().value_or(5) >= std::min(k1 - 1, 5));
            }
        }
    }
}

TEST_CASE("fixture ingestion") {
    const auto& f = dihedral();
    CHECK(f.D == 5);
    CHECK(f.k1 == 1);
    CHECK(f.level_norm == 529);
    CHECK(f.coverage_bound == 10000);
    CHECK(f.domain == Domain::Rational);
    CHECK(f.eigenvalue<Rational>({11, 1}) == 0);
    CHECK(f.eigenvalue<Rational>({3, 1}) == -1);
    CHECK(f.chi<Rational>({23, 1}) == 0);
    CHECK(f.divides_level({23, 1}));
    CHECK(f.ramified_at(23));
    CHECK_FALSE(f.ramified_at(5));
    CHECK(f.chi_rational.modulus() == 23);
    CHECK(f.chi_rational.conductor() == 1);

    const auto& g = symbolic();
    CHECK(g.k1 == 5);
    CHECK(g.k2 == 3);
    CHECK(g.domain == Domain::Polynomial);
    CHECK(g.eigenvalue<MPoly>({11, 2}) == MPoly::var("a_11_2"));
    CHECK(g.primes_over(11).size() == 2);
}

TEST_CASE("fixture ingestion errors") {
    CHECK(error_text(kFixtures + "/invalid/non_paritious.json").find("non-paritious weight") != std::string::npos);
    CHECK(error_text(kFixtures + "/invalid/incomplete_split_pair.json").find("incomplete eigenvalue table") !=
          std::string::npos);
    CHECK(error_text(kFixtures + "/invalid/malformed.json").find("malformed") != std::string::npos);
    try {
        ingest_fixture_file(kFixtures + "/does_not_exist.json");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
    try {
        ingest_fixture(R"({"label":"x","D":"5","weight":["2","2"],"level_norm":"1",)"
                       R"("chi_rational":{"modulus":"1","generator_values":[]},"chi_on_primes":[],)"
                       R"("eigenvalues":[{"ell":"2","index":"1","value":"1/0"}],"coverage_bound":"2"})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Schema);
        CHECK(std::string(e.what()).find("eigenvalues[0]") != std::string::npos);
    }
}

TEST_CASE("asai dirichlet coefficients") {
    const auto& f = dihedral();
    auto c = asai_dirichlet_coefficients<Rational>(f, 60);
    CHECK(c.at(1) == 1);
    // 11 split: a(p1) a(p2); 2 and 3 inert: a(lO)
    CHECK(c.at(11) == f.eigenvalue<Rational>({11, 1}) * f.eigenvalue<Rational>({11, 2}));
    CHECK(c.at(59) == f.eigenvalue<Rational>({59, 1}) * f.eigenvalue<Rational>({59, 2}));
    CHECK(c.at(2) == f.eigenvalue<Rational>({2, 1}));
    CHECK(c.at(3) == f.eigenvalue<Rational>({3, 1}));
    // n = 4: a(4O) + chi_Q(2) a(O)
    Rational a2 = f.eigenvalue<Rational>({2, 1}), x2 = f.chi<Rational>({2, 1});
    CHECK(c.at(4) == hecke_prime_power(a2, x2, 2) + f.chi_rational.value_rational(2));

    const auto& g = symbolic();
    auto s = asai_dirichlet_coefficients<MPoly>(g, 30);
    CHECK(s.at(11) == MPoly::var("a_11_1") * MPoly::var("a_11_2"));
    CHECK(s.at(7) == MPoly::var("a_7_1"));
    CHECK(s.at(5) == MPoly::var("a_5_1") * MPoly::var("a_5_1") - MPoly(1));
    CHECK(s.at(25) == MPoly::var("a_5_1") * MPoly::var("a_5_1") * MPoly::var("a_5_1") * MPoly::var("a_5_1") -
                          MPoly(3) * MPoly::var("a_5_1") * MPoly::var("a_5_1") + MPoly(1) + MPoly(1));

    CHECK_THROWS_AS(asai_dirichlet_coefficients<MPoly>(g, 200), Error);
    try {
        check_coverage(g, 200, 0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Coverage);
    }
}
