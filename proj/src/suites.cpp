#include "asai/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>

#include "asai/archimedean.hpp"
#include "asai/asai_lfun.hpp"
#include "asai/error.hpp"
#include "asai/iwasawa.hpp"
#include "asai/local_zeta.hpp"

namespace asai {

namespace {

using nlohmann::json;
using Case = std::function<json()>;

json identity_row(const IdentityReport& r) {
    json row{{"check", r.tag}, {"ok", r.ok}, {"order", r.order}};
    if (!r.ok) {
        row["first_mismatch"] = r.first_mismatch;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
    }
    return row;
}

Report run_cases(const std::string& name, const std::vector<Case>& cases) {
    std::vector<std::future<json>> futures;
    futures.reserve(cases.size());
    for (const auto& c : cases) futures.push_back(std::async(std::launch::async, c));
    Report r;
    r.command = "verify " + name;
    for (size_t i = 0; i < futures.size(); ++i) {
        json row;
        try {
            row = futures[i].get();
        } catch (const std::exception& e) {
            row = json{{"check", "exception"}, {"ok", false}, {"error", e.what()}};
        }
        row["case"] = i;
        if (!row.value("ok", false)) r.ok = false;
        r.add_row(row);
    }
    r.meta["cases"] = cases.size();
    r.meta["failures"] =
        std::count_if(r.rows.begin(), r.rows.end(), [](const json& j) { return !j.value("ok", false); });
    return r;
}

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(1, 9);
    int a = n(rng), sign = n(rng) % 2 ? 1 : -1, b = n(rng);
    return make_rational(a * sign, b);
}

MPoly var(const char* n) { return MPoly::var(n); }

std::vector<Case> rs_cases(const SuiteConfig& cfg) {
    int order = cfg.order;
    long q = cfg.p;
    std::vector<Case> cases;
    cases.push_back([=] {
        MPoly a = var("a"), b = var("b"), c = var("c"), d = var("d");
        return identity_row(check_unramified_rs(LocalFieldDatum::make(q, ExtensionType::Split), {{a, b}, {c, d}},
                                                a * b * c * d, order));
    });
    cases.push_back([=] {
        MPoly a = var("a"), b = var("b");
        return identity_row(
            check_unramified_rs(LocalFieldDatum::make(q, ExtensionType::Inert), {{a, b}}, var("chi"), order));
    });
    cases.push_back([=] {
        MPoly a = var("a"), b = var("b");
        return identity_row(
            check_unramified_rs(LocalFieldDatum::make(q, ExtensionType::Ramified), {{a, b}}, a * a * b * b, order));
    });
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < 6; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng), d = rand_rational(rng);
        bool split = i % 2 == 0;
        cases.push_back([=] {
            if (split)
                return identity_row(check_unramified_rs(LocalFieldDatum::make(q, ExtensionType::Split),
                                                        {{a, b}, {c, d}}, Rational(a * b * c * d), order));
            return identity_row(
                check_unramified_rs(LocalFieldDatum::make(q, ExtensionType::Inert), {{a, b}}, c, order));
        });
    }
    return cases;
}

std::vector<Case> imprimitive_cases(const SuiteConfig& cfg) {
    int order = cfg.order;
    long q = cfg.p;
    std::vector<Case> cases;
    for (auto t : {ExtensionType::Inert, ExtensionType::Ramified}) {
        auto d = LocalFieldDatum::make(q, t);
        cases.push_back([=] { return identity_row(check_imprimitive_identity(d, std::vector<MPoly>{}, 1, order)); });
        cases.push_back(
            [=] { return identity_row(check_imprimitive_identity(d, std::vector<MPoly>{var("a")}, 2, order)); });
        cases.push_back([=] {
            MPoly a = var("a"), b = var("b");
            MPoly chi = t == ExtensionType::Inert ? var("chi") : a * a * b * b;
            return identity_row(check_imprimitive_identity(d, std::vector<MPoly>{a, b}, 0, order, chi));
        });
    }
    cases.push_back([=] {
        // split place: the product of the two component factors against the torus route
        MPoly a = var("a"), c = var("c");
        auto d = LocalFieldDatum::make(q, ExtensionType::Split);
        auto w = whittaker_series<MPoly>(d, {{a}, {c}}, order);
        return identity_row(compare_expansions("imprimitive-split", torus_zeta(w),
                                               local_asai_imprimitive_split<MPoly>({a}, {c}), order));
    });
    return cases;
}

std::vector<Case> localintp_cases(const SuiteConfig& cfg) {
    int order = cfg.order;
    std::vector<Case> cases;
    long p0 = cfg.p;
    cases.push_back([=] {
        return identity_row(check_localintp_trivial_nu(var("A"), var("B"), var("C"), var("D"), p0, order));
    });
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < 25; ++i) {
        long p = i % 2 ? 5 : 3;
        Rational a = rand_rational(rng), b = rand_rational(rng) * p, c = rand_rational(rng), d = rand_rational(rng);
        if (valuation(a, p) != 0) a = 1 + p * a * a;
        cases.push_back([=] {
            json row = identity_row(check_localintp_trivial_nu(a, b, c, d, p, order));
            row["p"] = p;
            row["params"] = a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str();
            return row;
        });
    }
    return cases;
}

std::vector<Case> archimedean_cases() {
    std::vector<Case> cases;
    for (auto [k1, k2] : {std::pair{3, 1}, std::pair{5, 3}, std::pair{9, 3}}) {
        auto range = critical_range(k1, k2);
        for (int s : range.points()) {
            cases.push_back([=] {
                auto q = archimedean_quadrature(k1, k2, 5, s);
                return json{{"check", "archimedean-closed-form"},
                            {"k1", k1},
                            {"k2", k2},
                            {"s", s},
                            {"closed_form", archimedean_factor(k1, k2, 5, s).str()},
                            {"relative_error", q.relative_error},
                            {"ok", q.relative_error <= 1e-9}};
            });
        }
    }
    return cases;
}

std::vector<Case> measure_cases(const SuiteConfig& cfg) {
    std::vector<Case> cases;
    uint64_t seed = cfg.seed;
    long p = cfg.p;
    cases.push_back([=] {
        std::mt19937_64 rng(seed);
        const int M = 4, NT = 8;
        uint64_t q = ipow(p, M);
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            auto x = measure_random(rng, p, M, NT), y = measure_random(rng, p, M, NT);
            auto xy = measure_mul(x, y);
            for (long s = -2; s <= 3; ++s)
                for (long j = 0; j < p - 1; ++j) {
                    LocallyAlgebraicCharacter c{s, j, 0};
                    ok = ok && measure_eval(xy, c).residue ==
                                   mulmod(measure_eval(x, c).residue, measure_eval(y, c).residue, q);
                }
        }
        return json{{"check", "evaluation-homomorphism"}, {"ok", ok}};
    });
    cases.push_back([=] {
        std::mt19937_64 rng(seed + 1);
        const int M = 3, NT = 12;
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            TwoVariableMeasure mu;
            for (int i = 0; i < 1 + t % 4; ++i)
                mu.add_term(measure_random(rng, p, M, NT), measure_random(rng, p, M, NT));
            long tt = 2 * (t % 3), h = tt / 2;
            auto re = eisenstein_reindex(mu, tt);
            for (long s : {0L, 1L})
                for (long j : {0L, (p - 1) / 2})
                    ok = ok && measure_eval(re, {s, j, 0}) == measure_eval2(mu, {h - s, -j, 0}, {s + h - 1, j, 0});
        }
        return json{{"check", "reindex-commuting-square"}, {"ok", ok}};
    });
    cases.push_back([=] {
        std::mt19937_64 rng(seed + 2);
        const long pf = 5;
        const int M = 6, NT = 8;
        auto chars = standard_characters(pf, M);
        bool ok = true;
        int kernel = 0;
        for (int t = 0; t < 5; ++t) {
            auto mu = measure_random(rng, pf, M, NT);
            auto fit = fit_measure(measure_moments(mu, chars), pf, M, NT);
            kernel = fit.kernel_length;
            ok = ok && fit.consistent;
            for (long s = -6; s <= 25; ++s)
                for (long j = 0; j < pf - 1; ++j)
                    ok = ok && measure_eval(fit.measure, {s, j, 0}) == measure_eval(mu, {s, j, 0});
            ok = ok && fit_measure(measure_moments(fit.measure, chars), pf, M, NT).measure == fit.measure;
        }
        return json{{"check", "fit-roundtrip"}, {"ok", ok}, {"kernel_length", kernel}};
    });
    cases.push_back([=] {
        const int M = 3, NT = 8;
        long D = 1;
        while (true) {
            ++D;
            if (D % p == 0) continue;
            long rt = 1;
            while ((rt + 1) * (rt + 1) <= D) ++rt;
            if (rt * rt == D) continue;
            bool square = false;
            for (long x = 1; x < p; ++x) square = square || (x * x) % p == D % p;
            if (square) break;
        }
        PAdicInt r = padic_sqrt(Integer(D), p, dirac_precision(p, M, NT));
        uint64_t q = ipow(p, M);
        bool ok = true;
        for (int sign : {1, -1}) {
            PAdicInt root = sign > 0 ? r : -r;
            auto e = correction_unit(root, 5, 3, M, NT);
            uint64_t rq = root.residue() % q;
            uint64_t u = (q - invmod(rq, q)) % q;
            for (long s = 0; s <= 3; ++s)
                for (long j = 0; j < p - 1; ++j) {
                    uint64_t want = mulmod(mulmod((p + 1) % q, powmod(invmod(rq, q), 3, q), q),
                                           mulmod(powmod(teichmuller(u, p, M), j, q), powmod(u, s, q), q), q);
                    auto got = measure_eval(e, {s, j, 0});
                    ok = ok && got.residue == want && got.shift == -1;
                }
            ok = ok && measure_mul(e, measure_inverse(e)) == measure_one(p, M, NT);
        }
        return json{{"check", "correction-unit"}, {"ok", ok}, {"D", D}};
    });
    cases.push_back([=] {
        std::mt19937_64 rng(seed + 3);
        const int M = 4, n = 4;
        bool ok = true;
        for (int t = 0; t < 50; ++t) {
            PAdicMatrix A{p, M, n, std::vector<uint64_t>(n * n, 0)};
            uint64_t q = A.modulus();
            std::uniform_int_distribution<uint64_t> d(0, q - 1);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) A.at(i, j) = d(rng);
            auto e = ordinary_projector(A).e;
            ok = ok && e * e == e && e * A == A * e;
            uint64_t units = 0, trace = 0;
            for (int i = 0; i < n; ++i) {
                units += A.at(i, i) % p != 0;
                trace = (trace + e.at(i, i)) % q;
            }
            ok = ok && trace == units;
            if (A.at(0, 0) % p != 0) ok = ok && e.at(0, 0) == 1 && e.at(1, 0) == 0;
        }
        return json{{"check", "ordinary-projector"}, {"ok", ok}};
    });
    return cases;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"rs-unramified", "imprimitive", "localintp", "archimedean", "measure"};
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (cfg.order < 1 || cfg.order > 200) domain_error("order must lie in 1..200");
    Report r;
    if (name == "rs-unramified") r = run_cases(name, rs_cases(cfg));
    else if (name == "imprimitive") r = run_cases(name, imprimitive_cases(cfg));
    else if (name == "localintp") r = run_cases(name, localintp_cases(cfg));
    else if (name == "archimedean") r = run_cases(name, archimedean_cases());
    else if (name == "measure") r = run_cases(name, measure_cases(cfg));
    else fail(ErrorKind::Schema, "unknown suite '" + name + "'");
    r.meta["suite"] = name;
    r.meta["seed"] = cfg.seed;
    r.meta["order"] = cfg.order;
    r.meta["p"] = cfg.p;
    if (name == "archimedean") {
        double worst = 0;
        for (const auto& row : r.rows) worst = std::max(worst, row.value("relative_error", 0.0));
        r.meta["max_relative_error"] = worst;
    }
    return r;
}

}  // namespace asai
