#pragma once

#include <map>
#include <string>
#include <vector>

#include "asai/rational.hpp"

namespace asai {

// Laurent polynomial over Q in named indeterminates.
class MPoly {
public:
    using Exponents = std::vector<int>;

    MPoly() = default;
    MPoly(long value);
    MPoly(const Rational& value);

    static MPoly var(const std::string& name, int power = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    MPoly inverse() const;
    // Substitutes rational values for every indeterminate.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    std::string str() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator/(const MPoly& a, const MPoly& b) { return a * b.inverse(); }
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

private:
    MPoly with_vars(const std::vector<std::string>& vars) const;
    void normalize();

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const MPoly& x) { return x.is_zero(); }
inline MPoly inv(const MPoly& x) { return x.inverse(); }
inline std::string str(const MPoly& x) { return x.str(); }

}  // namespace asai
