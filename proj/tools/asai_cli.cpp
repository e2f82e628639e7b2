#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "asai/asai_lfun.hpp"
#include "asai/error.hpp"
#include "asai/hilbert.hpp"
#include "asai/iwasawa.hpp"
#include "asai/report.hpp"
#include "asai/suites.hpp"

using namespace asai;
using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 7;

struct Options {
    std::string fixture;
    long p = 0;
    int precision = 3;
    int order = 0;
    uint64_t seed = kDefaultSeed;
    std::string format = "json";
    std::string out;
    long ell_max = 50;

    std::string suite;
    std::string action;
    std::string in;
    std::string emit;
    long s = 0;
    std::string nu = "trivial";
    long t = 0;
    long D = 5;
    int k1 = 3, k2 = 1;
    long u = 2;
    std::string kind = "measure";
    int rank = 2;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot read " + path);
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) fail(ErrorKind::Io, "cannot write " + path);
}

template <class R>
std::vector<std::string> literal_list(const Polynomial<R>& P) {
    std::vector<std::string> out;
    for (const auto& c : P.coeffs()) out.push_back(asai::str(c));
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s;
}

HilbertEigenform load_form(const Options& o) {
    if (o.fixture.empty()) fail(ErrorKind::Schema, "--fixture is required");
    return ingest_fixture_file(o.fixture);
}

Report cmd_ingest(const Options& o) {
    HilbertEigenform f = load_form(o);
    Report r;
    r.command = "ingest";
    r.meta = json{{"label", f.label},
                  {"D", f.D},
                  {"weight", {f.k1, f.k2}},
                  {"level_norm", f.level_norm},
                  {"coverage_bound", f.coverage_bound},
                  {"chi_rational", f.chi_rational.str()},
                  {"domain", domain_name(f.domain)}};
    long top = std::min(o.ell_max, f.coverage_bound);
    for (long ell = 2; ell <= top; ++ell) {
        if (smallest_prime_factor(ell) != ell) continue;
        std::vector<std::string> eig;
        for (const auto& P : f.primes_over(ell))
            if (f.has(P)) eig.push_back(to_string(f.eigenvalues.at(P)));
        r.add_row(json{{"ell", ell},
                       {"splitting", splitting_name(f.splitting(ell))},
                       {"pi_ramified", f.ramified_at(ell)},
                       {"eigenvalues", join(eig)}});
    }
    return r;
}

template <class R>
void factor_rows(const HilbertEigenform& f, long ell_max, Report& r) {
    for (long ell = 2; ell <= ell_max; ++ell) {
        if (smallest_prime_factor(ell) != ell) continue;
        auto L = form_local_factor<R>(f, ell);
        r.add_row(json{{"ell", ell},
                       {"splitting", splitting_name(f.splitting(ell))},
                       {"numerator", join(literal_list(L.num()))},
                       {"denominator", join(literal_list(L.den()))}});
    }
}

Report cmd_factors(const Options& o) {
    HilbertEigenform f = load_form(o);
    if (o.ell_max < 2) fail(ErrorKind::Schema, "--ell-max must be at least 2");
    if (o.ell_max > f.coverage_bound)
        fail(ErrorKind::Coverage, "--ell-max " + std::to_string(o.ell_max) + " exceeds the coverage bound " +
                                      std::to_string(f.coverage_bound));
    Report r;
    r.command = "factors";
    switch (f.domain) {
        case Domain::Rational: factor_rows<Rational>(f, o.ell_max, r); break;
        case Domain::Cyclotomic: factor_rows<Cyclotomic>(f, o.ell_max, r); break;
        case Domain::Polynomial: factor_rows<MPoly>(f, o.ell_max, r); break;
    }
    long n_max = o.ell_max * o.ell_max;
    auto check = check_euler_dirichlet(f, n_max, o.ell_max);
    r.ok = check.ok;
    r.meta = json{{"label", f.label}, {"ell_max", o.ell_max}, {"check", check.tag}};
    if (check.ok) {
        r.meta["verdict"] = "exact match n <= " + std::to_string(n_max);
    } else {
        r.meta["verdict"] = "mismatch";
        r.meta["first_mismatch"] = check.first_mismatch;
        r.meta["lhs"] = check.lhs;
        r.meta["rhs"] = check.rhs;
    }
    return r;
}

Report cmd_verify(const Options& o) {
    SuiteConfig cfg;
    cfg.p = o.p ? o.p : 3;
    cfg.order = o.order ? o.order : 20;
    cfg.seed = o.seed;
    return run_suite(o.suite, cfg);
}

long measure_p(const Options& o) { return o.p ? o.p : 5; }
int measure_nt(const Options& o) { return o.order ? o.order : 4 * o.precision; }

LocallyAlgebraicCharacter parse_nu(const std::string& text, long s, long p) {
    if (text == "trivial") return {s, 0, 0};
    if (text == "quadratic") return {s, (p - 1) / 2, 0};
    LocallyAlgebraicCharacter chi{s, 0, 0};
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '*')) {
        auto hat = part.find('^');
        if (hat == std::string::npos) fail(ErrorKind::Schema, "--nu: expected omega^J or psi^C factors");
        std::string name = part.substr(0, hat);
        long e = 0;
        try {
            size_t used = 0;
            e = std::stol(part.substr(hat + 1), &used);
            if (used != part.size() - hat - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            fail(ErrorKind::Schema, "--nu: bad exponent in '" + part + "'");
        }
        if (name == "omega") chi.j = e;
        else if (name == "psi") chi.c = e;
        else fail(ErrorKind::Schema, "--nu: unknown factor '" + name + "'");
    }
    return chi;
}

void emit(const Options& o, const std::string& text) {
    if (!o.emit.empty()) write_file(o.emit, text);
}

Report cmd_measure(const Options& o) {
    Report r;
    r.command = "measure " + o.action;
    const std::string& a = o.action;
    if (a == "random") {
        std::mt19937_64 rng(o.seed);
        long p = measure_p(o);
        int NT = measure_nt(o);
        std::string text;
        if (o.kind == "tensor") {
            TwoVariableMeasure mu;
            for (int i = 0; i < o.rank; ++i)
                mu.add_term(measure_random(rng, p, o.precision, NT), measure_random(rng, p, o.precision, NT));
            text = serialize_tensor(mu);
        } else if (o.kind == "measure") {
            text = serialize_measure(measure_random(rng, p, o.precision, NT));
        } else {
            fail(ErrorKind::Schema, "--kind must be measure or tensor");
        }
        r.meta["serialized"] = text;
        emit(o, text);
    } else if (a == "dirac") {
        auto mu = measure_dirac(Integer(o.u), measure_p(o), o.precision, measure_nt(o));
        std::string text = serialize_measure(mu);
        r.meta["serialized"] = text;
        r.meta["u"] = o.u;
        emit(o, text);
    } else if (a == "moments") {
        auto mu = parse_measure(read_file(o.in));
        auto mom = measure_moments(mu, standard_characters(mu.p, mu.M));
        std::string text = serialize_moments(mu.p, mu.M, mu.NT, mom);
        r.meta["serialized"] = text;
        r.meta["count"] = mom.size();
        emit(o, text);
    } else if (a == "eval") {
        auto mu = parse_measure(read_file(o.in));
        auto chi = parse_nu(o.nu, o.s, mu.p);
        r.meta["character"] = chi.str();
        if (chi.c % mu.p != 0) {
            auto v = measure_eval_extended(mu, chi);
            r.meta["value_zeta_basis"] = v;
        } else {
            auto v = measure_eval(mu, chi);
            r.meta["value"] = v.str();
            r.meta["residue"] = v.residue;
            r.meta["shift"] = v.shift;
        }
        r.meta["modulus"] = mu.modulus();
    } else if (a == "fit") {
        auto file = parse_moments(read_file(o.in));
        auto fit = fit_measure(file.moments, file.p, file.M, file.NT);
        r.ok = fit.consistent;
        r.meta["flag"] = fit.flag;
        r.meta["kernel_length"] = fit.kernel_length;
        for (size_t i : fit.suspects) {
            const auto& m = file.moments[i];
            r.add_row(json{{"suspect", i}, {"character", m.chi.str()}, {"value", m.value}});
        }
        if (fit.consistent) {
            std::string text = serialize_measure(fit.measure);
            r.meta["serialized"] = text;
            emit(o, text);
        }
    } else if (a == "reindex") {
        auto mu = parse_tensor(read_file(o.in));
        auto re = eisenstein_reindex(mu, o.t);
        long h = o.t / 2;
        for (long s : {0L, 1L})
            for (const char* nu : {"trivial", "quadratic"}) {
                auto chi = parse_nu(nu, s, mu.p);
                auto lhs = measure_eval(re, chi);
                auto rhs = measure_eval2(mu, {h - s, -chi.j, 0}, {s + h - 1, chi.j, 0});
                bool ok = lhs == rhs;
                r.ok = r.ok && ok;
                r.add_row(json{{"check", "reindex-commuting-square"},
                               {"s", s},
                               {"nu", nu},
                               {"pushforward", lhs.str()},
                               {"two_variable", rhs.str()},
                               {"ok", ok}});
            }
        std::string text = serialize_measure(re);
        r.meta["serialized"] = text;
        r.meta["t"] = o.t;
        emit(o, text);
    } else if (a == "correction") {
        long p = measure_p(o);
        int NT = measure_nt(o);
        PAdicInt root = padic_sqrt(Integer(o.D), p, dirac_precision(p, o.precision, NT));
        r.meta["D"] = o.D;
        r.meta["weight"] = {o.k1, o.k2};
        std::string first;
        for (int sign : {1, -1}) {
            PAdicInt rt = sign > 0 ? root : -root;
            auto e = correction_unit(rt, o.k1, o.k2, o.precision, NT);
            std::string text = serialize_measure(e);
            if (first.empty()) first = text;
            json row{{"sqrt_D", PAdicInt(p, o.precision, rt.residue() % ipow(p, o.precision)).str()},
                     {"serialized", text}};
            for (long s = 0; s <= 2; ++s) row["value_s" + std::to_string(s)] = measure_eval(e, {s, 0, 0}).str();
            r.add_row(row);
        }
        emit(o, first);
    } else {
        fail(ErrorKind::Schema, "unknown measure action '" + a + "'");
    }
    return r;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Io: return 1;
        case ErrorKind::Schema: return 2;
        case ErrorKind::Coverage: return 3;
        case ErrorKind::Identity: return 4;
        case ErrorKind::Domain: return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asai L-function data for Hilbert modular eigenforms.\n"
                 "Exit codes: 0 pass, 1 I/O, 2 schema or invalid input, 3 coverage, 4 identity failure.\n"
                 "Randomized suites default to --seed 7."};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--fixture", o.fixture, "eigenform fixture (JSON)");
    app.add_option("--p", o.p, "prime (verify default 3, measure default 5)");
    app.add_option("--precision", o.precision, "p-adic precision M")->capture_default_str();
    app.add_option("--order", o.order, "series order (verify, default 20) or N_T (measure, default 4M)");
    app.add_option("--seed", o.seed, "random seed")->capture_default_str();
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", o.out, "write the report here instead of stdout");

    auto* ingest = app.add_subcommand("ingest", "validate a fixture and print its splitting table");
    ingest->add_option("--ell-max", o.ell_max, "last prime in the table")->capture_default_str();
    auto* factors = app.add_subcommand("factors", "local Asai factors and Euler/Dirichlet consistency");
    factors->add_option("--ell-max", o.ell_max, "largest prime")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", o.suite, "rs-unramified | imprimitive | localintp | archimedean | measure")
        ->required();
    auto* measure = app.add_subcommand("measure", "Iwasawa-algebra measures");
    measure->add_option("action", o.action, "fit | eval | reindex | correction | dirac | moments | random")
        ->required();
    measure->add_option("--in", o.in, "input measure, tensor or moment file");
    measure->add_option("--emit", o.emit, "write the resulting serialization here");
    measure->add_option("--s", o.s, "power of x")->capture_default_str();
    measure->add_option("--nu", o.nu, "trivial | quadratic | omega^J[*psi^C]")->capture_default_str();
    measure->add_option("--t", o.t, "even reindexing parameter")->capture_default_str();
    measure->add_option("--D", o.D, "discriminant for the correction unit")->capture_default_str();
    measure->add_option("--k1", o.k1)->capture_default_str();
    measure->add_option("--k2", o.k2)->capture_default_str();
    measure->add_option("--u", o.u, "Dirac point")->capture_default_str();
    measure->add_option("--kind", o.kind, "measure | tensor (random)")->capture_default_str();
    measure->add_option("--rank", o.rank, "tensor rank (random)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Report r;
        if (*ingest) r = cmd_ingest(o);
        else if (*factors) r = cmd_factors(o);
        else if (*verify) r = cmd_verify(o);
        else r = cmd_measure(o);
        std::string text = render(r, o.format);
        if (o.out.empty()) std::cout << text;
        else write_file(o.out, text);
        if (!r.ok) {
            std::cerr << "asai: " << r.command << " failed\n";
            return 4;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "asai: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "asai: " << e.what() << "\n";
        return 2;
    }
}
