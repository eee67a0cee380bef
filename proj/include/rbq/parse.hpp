#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "rbq/errors.hpp"
#include "rbq/multipoly.hpp"
#include "rbq/ratfunc.hpp"

namespace rbq {

// Recursive-descent parser for the coefficient text form:
//
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := ('-'|'+') factor | primary ('^' uint)?
//   primary := uint | symbol | '(' expr ')'
//
// '/' is exact division, so "1/2" and "b*c/a" both parse; "^" takes a
// nonnegative integer exponent. Whitespace is insignificant.
namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(what);
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_ws();
        throw ParseError("parse error", pos_, expected);
    }

    std::size_t pos() const { return pos_; }

    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    bool at_ident() {
        skip_ws();
        char c = pos_ < s_.size() ? s_[pos_] : '\0';
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string read_uint_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos_;
        if (!at_ident()) fail("identifier");
        ++pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : cur_(s) {}

    RatFunc parse_full() {
        RatFunc v = expr();
        if (!cur_.eof()) cur_.fail("end of input or operator");
        return v;
    }

    Cursor& cursor() { return cur_; }

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            if (cur_.accept('+')) {
                v = v + term();
            } else if (cur_.accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

private:
    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            if (cur_.accept('*')) {
                v = v * factor();
            } else if (cur_.accept('/')) {
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    RatFunc factor() {
        if (cur_.accept('-')) return -factor();
        if (cur_.accept('+')) return factor();
        RatFunc v = primary();
        if (cur_.accept('^')) {
            std::string digits = cur_.read_uint_digits();
            unsigned long e = std::stoul(digits);
            RatFunc r(Rational(1));
            for (unsigned long i = 0; i < e; ++i) r = r * v;
            return r;
        }
        return v;
    }

    RatFunc primary() {
        if (cur_.accept('(')) {
            RatFunc v = expr();
            cur_.expect(')', "')'");
            return v;
        }
        if (cur_.at_digit()) {
            std::string digits = cur_.read_uint_digits();
            return RatFunc(Rational(mpq_class(digits)));
        }
        if (cur_.at_ident()) {
            return RatFunc(MultiPoly::var(cur_.read_ident()));
        }
        cur_.fail("integer, variable, '(' or '-'");
    }

    Cursor cur_;
};

}  // namespace detail

inline RatFunc parse_ratfunc(std::string_view text) {
    return detail::ExprParser(text).parse_full();
}

inline MultiPoly parse_poly(std::string_view text) {
    RatFunc v = parse_ratfunc(text);
    if (!v.is_polynomial())
        throw ParseError("expression is not a polynomial", 0, "no residual denominator");
    return v.numerator();
}

inline Rational parse_rational(std::string_view text) {
    RatFunc v = parse_ratfunc(text);
    if (!v.is_constant())
        throw ParseError("expression is not a rational constant", 0, "constant expression");
    return v.constant_value();
}

// Element literal: sum of terms, each a coefficient, coefficient '*' basis,
// or bare basis; basis is one of 1, e0, e1, e2, e3; a coefficient is a
// rational literal or a parenthesized expression. Returns the coordinates.
inline std::array<RatFunc, 4> parse_element_coords(std::string_view text) {
    detail::ExprParser parser(text);
    detail::Cursor& cur = parser.cursor();
    std::array<RatFunc, 4> coords{RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(0)};

    auto basis_index = [](const std::string& id) -> int {
        if (id == "e0") return 0;
        if (id == "e1") return 1;
        if (id == "e2") return 2;
        if (id == "e3") return 3;
        return -1;
    };

    // reads 1 | e0..e3
    auto read_basis = [&]() -> int {
        if (cur.at_digit()) {
            std::string digits = cur.read_uint_digits();
            if (digits != "1") cur.fail("basis symbol e0..e3 or 1");
            return 0;
        }
        std::string id = cur.read_ident();
        int b = basis_index(id);
        if (b < 0) cur.fail("basis symbol e0..e3 or 1");
        return b;
    };

    bool first = true;
    while (true) {
        if (cur.eof()) {
            if (first) cur.fail("element term");
            break;
        }
        Rational sign(1);
        if (cur.accept('-')) {
            sign = Rational(-1);
        } else if (cur.accept('+')) {
            // explicit plus
        } else if (!first) {
            cur.fail("'+' or '-'");
        }
        while (cur.accept('-')) sign = -sign;

        RatFunc coeff(Rational(1));
        int basis = -1;

        if (cur.peek() == '(') {
            cur.accept('(');
            coeff = parser.expr();
            cur.expect(')', "')'");
            if (cur.accept('*')) basis = read_basis();
        } else if (cur.at_digit()) {
            std::string digits = cur.read_uint_digits();
            Rational num{mpq_class(digits)};
            if (cur.accept('/')) {
                Rational den{mpq_class(cur.read_uint_digits())};
                if (den.is_zero()) cur.fail("nonzero denominator");
                num /= den;
            }
            coeff = RatFunc(num);
            if (cur.accept('*')) basis = read_basis();
        } else if (cur.at_ident()) {
            basis = read_basis();
        } else {
            cur.fail("coefficient or basis");
        }
        if (basis < 0) basis = 0;  // bare coefficient contributes to e0

        coords[basis] = coords[basis] + coeff.scale(sign);
        first = false;
    }
    return coords;
}

}  // namespace rbq
