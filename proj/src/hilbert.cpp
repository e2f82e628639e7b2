#include "asai/hilbert.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace asai {

std::string splitting_name(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Inert: return "inert";
        case Splitting::Ramified: return "ramified";
    }
    return "?";
}

static bool squarefree(long n) {
    n = n < 0 ? -n : n;
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

bool is_fundamental_discriminant(long D) {
    if (D == 0 || D == 1) return false;
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    long m = D / 4;
    long mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && squarefree(m);
}

Splitting prime_splitting(long D, long ell) {
    if (!is_fundamental_discriminant(D)) domain_error("invalid discriminant");
    if (!is_prime(ell)) domain_error("not a prime: " + std::to_string(ell));
    int k = mpz_si_kronecker(D, Integer(ell).get_mpz_t());
    if (k == 1) return Splitting::Split;
    if (k == -1) return Splitting::Inert;
    return Splitting::Ramified;
}

std::vector<PrimeIdeal> HilbertEigenform::primes_over(long ell) const {
    if (splitting(ell) == Splitting::Split) return {{ell, 1}, {ell, 2}};
    return {{ell, 1}};
}

long HilbertEigenform::norm(const PrimeIdeal& P) const {
    return splitting(P.ell) == Splitting::Inert ? P.ell * P.ell : P.ell;
}

bool HilbertEigenform::divides_level(const PrimeIdeal& P) const {
    auto it = chi_on_primes.find(P);
    return it != chi_on_primes.end() && value_is_zero(it->second);
}

bool HilbertEigenform::ramified_at(long ell) const {
    for (const auto& P : primes_over(ell))
        if (divides_level(P)) return true;
    return false;
}

const Value& HilbertEigenform::lookup(const std::map<PrimeIdeal, Value>& m, const PrimeIdeal& P,
                                      const char* what) const {
    auto it = m.find(P);
    if (it == m.end())
        fail(ErrorKind::Coverage, std::string("insufficient eigenvalue coverage: no ") + what + " at prime (" +
                                      std::to_string(P.ell) + ", " + std::to_string(P.index) + ")");
    return it->second;
}

namespace {

using nlohmann::json;

long get_int(const json& j, const std::string& ctx) {
    if (j.is_number_integer()) return j.get<long>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        try {
            size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos == s.size()) return v;
        } catch (const std::exception&) {
        }
    }
    fail(ErrorKind::Schema, ctx + ": integer expected");
}

const json& field(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Schema, ctx + ": missing field '" + key + "'");
    return j.at(key);
}

Value get_value(const json& j, const std::string& ctx) {
    std::string text;
    if (j.is_string()) text = j.get<std::string>();
    else if (j.is_number_integer()) text = std::to_string(j.get<long>());
    else fail(ErrorKind::Schema, ctx + ": value literal expected");
    try {
        return parse_value(text);
    } catch (const Error& e) {
        fail(ErrorKind::Schema, ctx + ": " + e.what());
    }
}

std::map<PrimeIdeal, Value> read_prime_table(const json& doc, const std::string& key) {
    const json& arr = field(doc, key, "fixture");
    if (!arr.is_array()) fail(ErrorKind::Schema, key + ": array expected");
    std::map<PrimeIdeal, Value> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string ctx = key + "[" + std::to_string(i) + "]";
        PrimeIdeal P{get_int(field(arr[i], "ell", ctx), ctx + ".ell"),
                     static_cast<int>(get_int(field(arr[i], "index", ctx), ctx + ".index"))};
        if (!is_prime(P.ell)) fail(ErrorKind::Schema, ctx + ".ell: not a prime");
        if (P.index != 1 && P.index != 2) fail(ErrorKind::Schema, ctx + ".index: must be 1 or 2");
        if (!out.emplace(P, get_value(field(arr[i], "value", ctx), ctx + ".value")).second)
            fail(ErrorKind::Schema, ctx + ": duplicate prime ideal");
    }
    return out;
}

}  // namespace

HilbertEigenform ingest_fixture(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Schema, std::string("malformed fixture: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::Schema, "fixture: object expected");
    HilbertEigenform f;
    const json& label = field(doc, "label", "fixture");
    if (!label.is_string()) fail(ErrorKind::Schema, "label: string expected");
    f.label = label.get<std::string>();
    if (doc.contains("source") && doc["source"].is_string()) f.source = doc["source"].get<std::string>();
    f.D = get_int(field(doc, "D", "fixture"), "D");
    if (!is_fundamental_discriminant(f.D) || f.D < 0) fail(ErrorKind::Schema, "D: invalid discriminant");
    const json& w = field(doc, "weight", "fixture");
    if (!w.is_array() || w.size() != 2) fail(ErrorKind::Schema, "weight: [k1, k2] expected");
    f.k1 = static_cast<int>(get_int(w[0], "weight[0]"));
    f.k2 = static_cast<int>(get_int(w[1], "weight[1]"));
    if (f.k1 < 1 || f.k2 < 1) fail(ErrorKind::Schema, "weight: positive integers expected");
    if ((f.k1 - f.k2) % 2 != 0) fail(ErrorKind::Schema, "non-paritious weight");
    f.level_norm = get_int(field(doc, "level_norm", "fixture"), "level_norm");
    if (f.level_norm < 1) fail(ErrorKind::Schema, "level_norm: positive integer expected");
    f.coverage_bound = get_int(field(doc, "coverage_bound", "fixture"), "coverage_bound");

    const json& chi = field(doc, "chi_rational", "fixture");
    long modulus = get_int(field(chi, "modulus", "chi_rational"), "chi_rational.modulus");
    if (modulus < 1) fail(ErrorKind::Schema, "chi_rational.modulus: positive integer expected");
    const json& gv = field(chi, "generator_values", "chi_rational");
    if (!gv.is_array()) fail(ErrorKind::Schema, "chi_rational.generator_values: array expected");
    auto gens = standard_generators(modulus);
    if (gv.size() != gens.size())
        fail(ErrorKind::Schema, "chi_rational.generator_values: expected " + std::to_string(gens.size()) + " entries");
    std::vector<Cyclotomic> vals;
    for (size_t i = 0; i < gv.size(); ++i) {
        std::string ctx = "chi_rational.generator_values[" + std::to_string(i) + "]";
        long g = get_int(field(gv[i], "generator", ctx), ctx + ".generator");
        if (g != gens[i].g)
            fail(ErrorKind::Schema, ctx + ".generator: expected " + std::to_string(gens[i].g));
        Value v = get_value(field(gv[i], "value", ctx), ctx + ".value");
        if (domain_of(v) == Domain::Polynomial) fail(ErrorKind::Schema, ctx + ".value: must be a root of unity");
        vals.push_back(value_as<Cyclotomic>(v));
    }
    f.chi_rational = DirichletCharacter::from_values(modulus, vals);
    for (auto [l, e] : factorize(f.level_norm))
        if (modulus % l != 0)
            fail(ErrorKind::Schema, "chi_rational.modulus must be divisible by every prime dividing the level");

    f.eigenvalues = read_prime_table(doc, "eigenvalues");
    f.chi_on_primes = read_prime_table(doc, "chi_on_primes");

    // Coefficient domain of the whole form.
    Domain dom = Domain::Rational;
    int order = 1;
    for (const auto* table : {&f.eigenvalues, &f.chi_on_primes}) {
        for (const auto& [P, v] : *table) {
            dom = common_domain(dom, domain_of(v));
            order = static_cast<int>(lcm_long(order, cyclotomic_order(v)));
        }
    }
    f.domain = dom;
    f.cyclotomic_order = order;
    for (auto* table : {&f.eigenvalues, &f.chi_on_primes})
        for (auto& [P, v] : *table) v = promote(v, dom, order);

    for (const auto& [P, v] : f.eigenvalues) {
        Splitting s = prime_splitting(f.D, P.ell);
        if (s != Splitting::Split && P.index != 1)
            fail(ErrorKind::Schema, "eigenvalues: index 2 given for non-split prime " + std::to_string(P.ell));
        if (!f.chi_on_primes.count(P))
            fail(ErrorKind::Schema, "chi_on_primes: missing entry for (" + std::to_string(P.ell) + ", " +
                                        std::to_string(P.index) + ")");
        if (f.divides_level(P) && f.level_norm % P.ell != 0)
            fail(ErrorKind::Schema, "chi_on_primes: zero value at a prime not dividing the level");
    }
    for (long ell = 2; ell <= f.coverage_bound; ++ell) {
        if (!is_prime(ell)) continue;
        for (const auto& P : f.primes_over(ell))
            if (!f.eigenvalues.count(P))
                fail(ErrorKind::Schema, "incomplete eigenvalue table: missing (" + std::to_string(P.ell) + ", " +
                                            std::to_string(P.index) + ")");
    }
    return f;
}

HilbertEigenform ingest_fixture_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot read fixture " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ingest_fixture(ss.str());
}

Value SatakePair::sum() const {
    if (!symbolic)
        return std::visit(
            [&](const auto& a) -> Value {
                using T = std::decay_t<decltype(a)>;
                return T(a + value_as<T>(beta));
            },
            alpha);
    // (h + s) + (h - s) computed in Q(sqrt disc).
    return std::visit(
        [&](const auto& h) -> Value {
            using T = std::decay_t<decltype(h)>;
            T half = T(Rational(1, 2));
            QuadraticExt<T> a{h, half, value_as<T>(disc)}, b{h, T(0) - half, value_as<T>(disc)};
            auto s = a + b;
            if (!s.in_base()) domain_error("satake sum left the base field");
            return s.x;
        },
        half_trace);
}

Value SatakePair::product() const {
    if (!symbolic)
        return std::visit(
            [&](const auto& a) -> Value {
                using T = std::decay_t<decltype(a)>;
                return T(a * value_as<T>(beta));
            },
            alpha);
    return std::visit(
        [&](const auto& h) -> Value {
            using T = std::decay_t<decltype(h)>;
            T half = T(Rational(1, 2));
            QuadraticExt<T> a{h, half, value_as<T>(disc)}, b{h, T(0) - half, value_as<T>(disc)};
            auto s = a * b;
            if (!s.in_base()) domain_error("satake product left the base field");
            return s.x;
        },
        half_trace);
}

std::string SatakePair::str() const {
    if (!symbolic) return "{" + to_string(alpha) + ", " + to_string(beta) + "}";
    return "{" + to_string(half_trace) + " +- (1/2)*sqrt(" + to_string(disc) + ")}";
}

SatakePair satake(const Value& a, const Value& chi) {
    Domain d = common_domain(domain_of(a), domain_of(chi));
    int order = static_cast<int>(lcm_long(cyclotomic_order(a), cyclotomic_order(chi)));
    Value A = promote(a, d, order), C = promote(chi, d, order);
    SatakePair s;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const T& c = std::get<T>(C);
            T disc = x * x - T(4) * c;
            T half = x * T(Rational(1, 2));
            s.half_trace = half;
            s.disc = disc;
            Value dv = disc;
            if (domain_of(dv) != Domain::Polynomial) {
                Cyclotomic dc = value_as<Cyclotomic>(dv);
                if (dc.is_rational()) {
                    Rational root;
                    if (is_square(dc.rational_part(), &root) && d == Domain::Rational) {
                        s.alpha = Value(Rational(value_as<Rational>(Value(half)) + root / 2));
                        s.beta = Value(Rational(value_as<Rational>(Value(half)) - root / 2));
                        return;
                    }
                    Cyclotomic r = sqrt_rational(dc.rational_part()) * Cyclotomic(Rational(1, 2));
                    Cyclotomic h = value_as<Cyclotomic>(Value(half));
                    s.alpha = Value(h + r);
                    s.beta = Value(h - r);
                    return;
                }
            } else {
                // Perfect squares in the polynomial ring are not searched for.
            }
            s.symbolic = true;
        },
        A);
    return s;
}

Stabilization p_stabilize(const Rational& a, const Rational& chi, long p, int k1, int M) {
    if (k1 < 1) domain_error("weight must be positive");
    if (valuation(a, p) < 0 || valuation(chi, p) < 0) domain_error("a_p must be integral at p");
    if (valuation(a, p) > 0) domain_error("non-ordinary at 𝔭₁");
    PAdicInt A = PAdicInt::from_rational(a, p, M);
    PAdicInt c = PAdicInt::from_rational(chi, p, M) * PAdicInt(p, M, ipow(static_cast<uint64_t>(p), k1 - 1));
    // Simple unit root of the reduction mod p.
    long root = -1;
    for (long r = 1; r < p && root < 0; ++r) {
        PAdicInt x(p, M, static_cast<uint64_t>(r));
        PAdicInt f = x * x - A * x + c;
        PAdicInt df = x + x - A;
        if (f.residue() % p == 0 && df.is_unit()) root = r;
    }
    if (root < 0) domain_error("non-ordinary at 𝔭₁");
    PAdicInt x(p, M, static_cast<uint64_t>(root));
    for (int prec = 1; prec < M; prec *= 2) x = x - (x * x - A * x + c) * (x + x - A).inverse();
    Stabilization s{x, c * x.inverse()};
    return s;
}

long smallest_prime_factor(long n) {
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    while (n > 1) {
        long p = smallest_prime_factor(n);
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    return f;
}

void check_coverage(const HilbertEigenform& form, long n_max, long smooth_bound) {
    long B = smooth_bound > 0 ? std::min(smooth_bound, n_max) : n_max;
    for (long ell = 2; ell <= B; ++ell) {
        if (!is_prime(ell)) continue;
        if (ell > form.coverage_bound)
            fail(ErrorKind::Coverage, "insufficient eigenvalue coverage: need primes up to " + std::to_string(B) +
                                          ", fixture covers " + std::to_string(form.coverage_bound));
        for (const auto& P : form.primes_over(ell))
            if (!form.has(P))
                fail(ErrorKind::Coverage,
                     "insufficient eigenvalue coverage: missing prime above " + std::to_string(ell));
    }
}

template <class R>
std::map<long, R> asai_dirichlet_coefficients(const HilbertEigenform& form, long n_max, long smooth_bound) {
    check_coverage(form, n_max, smooth_bound);
    long B = smooth_bound > 0 ? std::min(smooth_bound, n_max) : n_max;
    // b[ell][v] = a_{ell^v O_F}
    std::map<long, std::vector<R>> local;
    for (long ell = 2; ell <= B; ++ell) {
        if (!is_prime(ell)) continue;
        int vmax = 0;
        for (long q = ell; q <= n_max; q *= ell) ++vmax;
        Splitting s = form.splitting(ell);
        auto powers = [&](const PrimeIdeal& P, int n) {
            R a = form.eigenvalue<R>(P), c = form.chi<R>(P);
            std::vector<R> out;
            for (int r = 0; r <= n; ++r) out.push_back(hecke_prime_power(a, c, r));
            return out;
        };
        std::vector<R> b;
        if (s == Splitting::Split) {
            auto A1 = powers({ell, 1}, vmax), A2 = powers({ell, 2}, vmax);
            for (int v = 0; v <= vmax; ++v) b.push_back(A1[v] * A2[v]);
        } else if (s == Splitting::Inert) {
            b = powers({ell, 1}, vmax);
        } else {
            auto A = powers({ell, 1}, 2 * vmax);
            for (int v = 0; v <= vmax; ++v) b.push_back(A[2 * v]);
        }
        local[ell] = std::move(b);
    }
    std::map<long, R> bn;
    std::vector<long> smooth;
    for (long n = 1; n <= n_max; ++n) {
        auto f = factorize(n);
        bool ok = true;
        for (auto [l, e] : f) ok = ok && l <= B;
        if (!ok) continue;
        R v(1);
        for (auto [l, e] : f) v = v * local.at(l)[e];
        bn.emplace(n, std::move(v));
        smooth.push_back(n);
    }
    std::map<long, R> c;
    for (long n : smooth) {
        R acc(0);
        for (long m = 1; m * m <= n; ++m) {
            if (n % (m * m)) continue;
            R chi_m = value_as<R>(Value(form.chi_rational.value(m)));
            if (is_zero(chi_m)) continue;
            acc += chi_m * bn.at(n / (m * m));
        }
        c.emplace(n, std::move(acc));
    }
    return c;
}

template std::map<long, Rational> asai_dirichlet_coefficients<Rational>(const HilbertEigenform&, long, long);
template std::map<long, Cyclotomic> asai_dirichlet_coefficients<Cyclotomic>(const HilbertEigenform&, long, long);
template std::map<long, MPoly> asai_dirichlet_coefficients<MPoly>(const HilbertEigenform&, long, long);

}  // namespace asai
