#include "asai/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace asai {

MPoly::MPoly(long value) : MPoly(Rational(value)) {}

MPoly::MPoly(const Rational& value) {
    if (sgn(value) != 0) terms_[{}] = value;
}

MPoly MPoly::var(const std::string& name, int power) {
    MPoly r;
    r.vars_ = {name};
    r.terms_[{power}] = 1;
    r.normalize();
    return r;
}

bool MPoly::is_constant() const { return vars_.empty(); }

Rational MPoly::constant_term() const {
    Exponents zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i)
        pos[i] = std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin();
    MPoly r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

void MPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0) it = terms_.erase(it);
        else ++it;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    std::map<Exponents, Rational> nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.terms_.empty()) return *this;
    if (vars_ != o.vars_) {
        auto v = merged(vars_, o.vars_);
        *this = with_vars(v);
        MPoly b = o.with_vars(v);
        for (const auto& [e, c] : b.terms_) terms_[e] += c;
    } else {
        for (const auto& [e, c] : o.terms_) terms_[e] += c;
    }
    normalize();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    *this += -o;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return MPoly();
    if (a.is_constant()) {
        MPoly r = b;
        Rational s = a.constant_term();
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }
    if (b.is_constant()) return b * a;
    auto v = a.vars_ == b.vars_ ? a.vars_ : merged(a.vars_, b.vars_);
    MPoly x = a.with_vars(v), y = b.with_vars(v);
    MPoly r;
    r.vars_ = v;
    MPoly::Exponents e(v.size());
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            for (size_t i = 0; i < v.size(); ++i) e[i] = ex[i] + ey[i];
            auto [it, inserted] = r.terms_.try_emplace(e, cx * cy);
            if (!inserted) it->second += cx * cy;
        }
    }
    r.normalize();
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::inverse() const {
    if (terms_.empty()) domain_error("division by zero");
    if (terms_.size() != 1) domain_error("polynomial is not a unit");
    MPoly r;
    r.vars_ = vars_;
    const auto& [e, c] = *terms_.begin();
    Exponents ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    r.terms_.emplace(std::move(ne), Rational(1) / c);
    return r;
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& values) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            auto it = values.find(vars_[i]);
            if (it == values.end()) domain_error("no value for indeterminate " + vars_[i]);
            t *= pow(it->second, e[i]);
        }
        s += t;
    }
    return s;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first for readability; order is deterministic.
    std::vector<std::pair<Exponents, Rational>> ts(terms_.rbegin(), terms_.rend());
    for (const auto& [e, c] : ts) {
        Rational a = abs(c);
        bool neg = sgn(c) < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
        if (!has_var) {
            os << a.get_str();
            continue;
        }
        bool need_star = false;
        if (a != 1) {
            os << a.get_str();
            need_star = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] != 1) os << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace asai
