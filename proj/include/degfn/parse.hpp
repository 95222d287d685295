#ifndef DEGFN_PARSE_HPP
#define DEGFN_PARSE_HPP

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "degfn/poly.hpp"
#include "degfn/rational.hpp"

namespace degfn {

struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

// Recursive-descent parser for polynomial expressions.
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | name | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// Whitespace is insignificant.  Names are resolved against the caller's
// variable list first, then against an optional table of named field
// constants (e.g. "s" over Q(s)).
template <typename F>
class PolyParser {
public:
    PolyParser(std::vector<std::string> vars, std::map<std::string, F> consts = {})
        : vars_(std::move(vars)), consts_(std::move(consts)) {}

    Polynomial<F> parse(const std::string& text) const {
        Cursor cur{text, 0};
        Polynomial<F> p = parse_expr(cur);
        skip_ws(cur);
        if (cur.pos != cur.text.size()) throw ParseError(cur.pos, "unexpected character");
        return p;
    }

private:
    struct Cursor {
        const std::string& text;
        std::size_t pos;
    };

    static void skip_ws(Cursor& c) {
        while (c.pos < c.text.size() && std::isspace((unsigned char)c.text[c.pos])) ++c.pos;
    }
    static bool peek(Cursor& c, char ch) {
        skip_ws(c);
        return c.pos < c.text.size() && c.text[c.pos] == ch;
    }
    static bool accept(Cursor& c, char ch) {
        if (!peek(c, ch)) return false;
        ++c.pos;
        return true;
    }

    Polynomial<F> parse_expr(Cursor& c) const {
        bool neg = false;
        skip_ws(c);
        if (accept(c, '-'))
            neg = true;
        else
            accept(c, '+');
        Polynomial<F> acc = parse_term(c);
        if (neg) acc = -acc;
        for (;;) {
            if (accept(c, '+'))
                acc += parse_term(c);
            else if (accept(c, '-'))
                acc -= parse_term(c);
            else
                break;
        }
        return acc;
    }

    Polynomial<F> parse_term(Cursor& c) const {
        Polynomial<F> acc = parse_factor(c);
        while (accept(c, '*')) acc *= parse_factor(c);
        return acc;
    }

    Polynomial<F> parse_factor(Cursor& c) const {
        Polynomial<F> base = parse_base(c);
        if (accept(c, '^')) {
            skip_ws(c);
            std::size_t at = c.pos;
            unsigned long n = parse_natural(c);
            if (n > 4096) throw ParseError(at, "exponent too large");
            return base.pow((unsigned)n);
        }
        return base;
    }

    Polynomial<F> parse_base(Cursor& c) const {
        skip_ws(c);
        if (c.pos >= c.text.size()) throw ParseError(c.pos, "unexpected end of input");
        char ch = c.text[c.pos];
        if (ch == '(') {
            ++c.pos;
            Polynomial<F> inner = parse_expr(c);
            if (!accept(c, ')')) throw ParseError(c.pos, "expected ')'");
            return inner;
        }
        if (std::isdigit((unsigned char)ch)) return parse_rational(c);
        if (std::isalpha((unsigned char)ch) || ch == '_') return parse_name(c);
        throw ParseError(c.pos, "expected number, name or '('");
    }

    Polynomial<F> parse_name(Cursor& c) const {
        std::size_t start = c.pos;
        while (c.pos < c.text.size() &&
               (std::isalnum((unsigned char)c.text[c.pos]) || c.text[c.pos] == '_'))
            ++c.pos;
        std::string name = c.text.substr(start, c.pos - start);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return Polynomial<F>::variable(vars_.size(), i, F(1));
        auto it = consts_.find(name);
        if (it != consts_.end()) return Polynomial<F>::constant(vars_.size(), it->second);
        throw ParseError(start, "unknown variable '" + name + "'");
    }

    Polynomial<F> parse_rational(Cursor& c) const {
        std::size_t at = c.pos;
        std::string digits = parse_digits(c);
        Rational q(digits, 10);
        if (accept(c, '/')) {
            skip_ws(c);
            std::size_t dat = c.pos;
            std::string den = parse_digits(c);
            Rational d(den, 10);
            if (degfn::is_zero(d)) throw ParseError(dat, "malformed rational: zero denominator");
            q /= d;
        }
        q.canonicalize();
        (void)at;
        return Polynomial<F>::constant(vars_.size(), F(q));
    }

    std::string parse_digits(Cursor& c) const {
        skip_ws(c);
        std::size_t start = c.pos;
        while (c.pos < c.text.size() && std::isdigit((unsigned char)c.text[c.pos])) ++c.pos;
        if (c.pos == start) throw ParseError(start, "expected digits");
        return c.text.substr(start, c.pos - start);
    }

    unsigned long parse_natural(Cursor& c) const {
        std::string d = parse_digits(c);
        return std::stoul(d);
    }

    std::vector<std::string> vars_;
    std::map<std::string, F> consts_;
};

template <typename F>
Polynomial<F> parse_poly(const std::string& text, const std::vector<std::string>& vars,
                         const std::map<std::string, F>& consts = {}) {
    return PolyParser<F>(vars, consts).parse(text);
}

}  // namespace degfn

#endif
