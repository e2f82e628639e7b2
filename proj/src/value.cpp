#include "asai/value.hpp"

#include <cctype>
#include <regex>

namespace asai {

std::string domain_name(Domain d) {
    switch (d) {
        case Domain::Rational: return "rational";
        case Domain::Cyclotomic: return "cyclotomic";
        case Domain::Polynomial: return "polynomial";
    }
    return "?";
}

Domain common_domain(Domain a, Domain b) {
    if ((a == Domain::Cyclotomic && b == Domain::Polynomial) || (a == Domain::Polynomial && b == Domain::Cyclotomic))
        fail(ErrorKind::Schema, "cannot mix cyclotomic numbers and indeterminates");
    return a > b ? a : b;
}

int cyclotomic_order(const Value& v) {
    if (auto* c = std::get_if<Cyclotomic>(&v)) return c->order();
    return 1;
}

Value promote(const Value& v, Domain target, int order) {
    Domain d = domain_of(v);
    if (d == target) {
        if (target == Domain::Cyclotomic && order > 1) {
            const auto& c = std::get<Cyclotomic>(v);
            return c.promote(static_cast<int>(lcm_long(order, c.order())));
        }
        return v;
    }
    if (d == Domain::Rational && target == Domain::Cyclotomic) return Cyclotomic(std::get<Rational>(v), order);
    if (d == Domain::Rational && target == Domain::Polynomial) return MPoly(std::get<Rational>(v));
    if (d == Domain::Cyclotomic && target == Domain::Rational) {
        const auto& c = std::get<Cyclotomic>(v);
        if (c.is_rational()) return c.rational_part();
    }
    if (d == Domain::Cyclotomic && target == Domain::Polynomial) {
        const auto& c = std::get<Cyclotomic>(v);
        if (c.is_rational()) return MPoly(c.rational_part());
    }
    if (d == Domain::Polynomial && target == Domain::Cyclotomic) {
        const auto& p = std::get<MPoly>(v);
        if (p.is_constant()) return Cyclotomic(p.constant_term(), order);
    }
    if (d == Domain::Polynomial && target == Domain::Rational) {
        const auto& p = std::get<MPoly>(v);
        if (p.is_constant()) return p.constant_term();
    }
    fail(ErrorKind::Schema, "cannot promote " + domain_name(d) + " value to " + domain_name(target));
}

std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return str(x); }, v);
}

bool value_is_zero(const Value& v) {
    return std::visit([](const auto& x) { return is_zero(x); }, v);
}

namespace {

Value binary(const Value& a, const Value& b, char op) {
    Domain d = common_domain(domain_of(a), domain_of(b));
    Value x = promote(a, d), y = promote(b, d);
    return std::visit(
        [&](const auto& u) -> Value {
            using T = std::decay_t<decltype(u)>;
            const T& w = std::get<T>(y);
            switch (op) {
                case '+': return T(u + w);
                case '-': return T(u - w);
                case '*': return T(u * w);
                default: return T(u * inv(w));
            }
        },
        x);
}

Value power(const Value& a, long e) {
    return std::visit(
        [&](const auto& u) -> Value {
            using T = std::decay_t<decltype(u)>;
            T base = e < 0 ? T(inv(u)) : u;
            T r(1);
            for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
            return r;
        },
        a);
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Value parse() {
        Value v = expr();
        skip();
        if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::Schema, "bad value literal '" + s_ + "': " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Value expr() {
        Value v = term();
        while (true) {
            if (eat('+')) v = binary(v, term(), '+');
            else if (eat('-')) v = binary(v, term(), '-');
            else return v;
        }
    }
    Value term() {
        Value v = unary();
        while (true) {
            if (eat('*')) v = binary(v, unary(), '*');
            else if (eat('/')) v = binary(v, unary(), '/');
            else return v;
        }
    }
    Value unary() {
        if (eat('-')) return binary(Rational(0), unary(), '-');
        if (eat('+')) return unary();
        return pow_expr();
    }
    Value pow_expr() {
        Value base = atom();
        if (!eat('^')) return base;
        bool neg = false;
        bool paren = eat('(');
        if (eat('-')) neg = true;
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) error("exponent expected");
        long e = std::stol(s_.substr(start, i_ - start));
        if (paren && !eat(')')) error("')' expected");
        return power(base, neg ? -e : e);
    }
    Value atom() {
        skip();
        if (eat('(')) {
            Value v = expr();
            if (!eat(')')) error("')' expected");
            return v;
        }
        if (i_ >= s_.size()) error("operand expected");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Rational(Integer(s_.substr(start, i_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(start, i_ - start);
            static const std::regex zeta_re("zeta_([0-9]+)");
            std::smatch m;
            if (std::regex_match(name, m, zeta_re)) {
                int n = std::stoi(m[1].str());
                if (n < 1 || n > 100000) error("unsupported root of unity order");
                return Cyclotomic::zeta(n);
            }
            if (name == "i") return Cyclotomic::zeta(4);
            return MPoly::var(name);
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    size_t i_ = 0;
};

}  // namespace

Value parse_value(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace asai
