#pragma once

#include <string>
#include <variant>

#include "asai/cyclotomic.hpp"
#include "asai/mpoly.hpp"
#include "asai/rational.hpp"

namespace asai {

enum class Domain { Rational = 0, Cyclotomic = 1, Polynomial = 2 };

std::string domain_name(Domain d);

using Value = std::variant<Rational, Cyclotomic, MPoly>;

inline Domain domain_of(const Value& v) { return static_cast<Domain>(v.index()); }

// Explicit promotion; Cyclotomic -> Polynomial is rejected.
Value promote(const Value& v, Domain target, int cyclotomic_order = 1);
Domain common_domain(Domain a, Domain b);
int cyclotomic_order(const Value& v);

// Parses "3/2", "zeta_5^2 - zeta_5^3", "a_11_1^2 - 2*chi", parenthesized sums and products.
Value parse_value(const std::string& text);
std::string to_string(const Value& v);
bool value_is_zero(const Value& v);

template <class R>
R value_as(const Value& v);

template <>
inline Rational value_as<Rational>(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    if (auto* c = std::get_if<Cyclotomic>(&v); c && c->is_rational()) return c->rational_part();
    if (auto* p = std::get_if<MPoly>(&v); p && p->is_constant()) return p->constant_term();
    domain_error("value " + to_string(v) + " is not rational");
}

template <>
inline Cyclotomic value_as<Cyclotomic>(const Value& v) {
    return std::get<Cyclotomic>(promote(v, Domain::Cyclotomic));
}

template <>
inline MPoly value_as<MPoly>(const Value& v) {
    return std::get<MPoly>(promote(v, Domain::Polynomial));
}

}  // namespace asai
