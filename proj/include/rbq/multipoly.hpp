#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbq/errors.hpp"
#include "rbq/rational.hpp"
#include "rbq/symbols.hpp"

namespace rbq {

// Sparse multivariate polynomial over Rational in canonical form:
//   - vars_ is the ascending (by fixed precedence) set of variables that
//     actually occur,
//   - terms_ is sorted in descending graded-lex order with no zero
//     coefficients, exponent vectors aligned with vars_.
// Canonical forms are structurally comparable: two polynomials are equal as
// ring elements iff their representations compare equal.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;

    struct Term {
        Exponents exp;
        Rational coeff;

        bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
    };

    MultiPoly() = default;  // zero

    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_.push_back(Term{{}, c});
    }

    explicit MultiPoly(long n) : MultiPoly(Rational(n)) {}

    static MultiPoly var(std::string_view name) {
        MultiPoly p;
        p.vars_.push_back(Sym::intern(name));
        p.terms_.push_back(Term{{1}, Rational(1)});
        return p;
    }

    // Builds the canonical form of an arbitrary term list (exponents keyed by
    // variable name); duplicate monomials are combined.
    static MultiPoly from_terms(
        const std::vector<std::pair<std::map<std::string, unsigned>, Rational>>& raw) {
        MultiPoly acc;
        for (const auto& [mono, coeff] : raw) {
            MultiPoly t{coeff};
            for (const auto& [name, e] : mono) t = t * var(name).pow(e);
            acc = acc + t;
        }
        return acc;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && vars_.empty() && terms_[0].coeff.is_one();
    }

    // requires is_constant()
    Rational constant_value() const {
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }

    std::size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const Term& t : terms_) d = std::max(d, degree_of(t.exp));
        return d;
    }

    const std::vector<Sym>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    Rational leading_coeff() const {
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
        auto [vars, xt, yt] = unify(x, y);
        MultiPoly r;
        r.vars_ = std::move(vars);
        xt.insert(xt.end(), yt.begin(), yt.end());
        r.terms_ = std::move(xt);
        r.normalize();
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }

    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        if (x.is_zero() || y.is_zero()) return MultiPoly();
        auto [vars, xt, yt] = unify(x, y);
        MultiPoly r;
        r.vars_ = std::move(vars);
        r.terms_.reserve(xt.size() * yt.size());
        const std::size_t n = r.vars_.size();
        for (const Term& a : xt) {
            for (const Term& b : yt) {
                Term t;
                t.exp.resize(n);
                for (std::size_t v = 0; v < n; ++v) t.exp[v] = a.exp[v] + b.exp[v];
                t.coeff = a.coeff * b.coeff;
                r.terms_.push_back(std::move(t));
            }
        }
        r.normalize();
        return r;
    }

    MultiPoly scale(const Rational& s) const {
        if (s.is_zero()) return MultiPoly();
        MultiPoly r = *this;
        for (Term& t : r.terms_) t.coeff = t.coeff * s;
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r{Rational(1)};
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (vars_.size() != o.vars_.size() || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] != o.vars_[i]) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact substitution; every occurring variable must be assigned.
    Rational eval(const std::map<std::string, Rational>& assignment) const {
        std::vector<Rational> values;
        values.reserve(vars_.size());
        for (Sym v : vars_) {
            auto it = assignment.find(v.name());
            if (it == assignment.end()) throw MissingVariable(v.name());
            values.push_back(it->second);
        }
        Rational acc(0);
        for (const Term& t : terms_) {
            Rational m = t.coeff;
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (t.exp[v]) m *= values[v].pow(t.exp[v]);
            acc += m;
        }
        return acc;
    }

    // Replaces mapped variables by polynomials; unmapped variables stay themselves.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& map) const {
        std::vector<MultiPoly> images;
        images.reserve(vars_.size());
        for (Sym v : vars_) {
            auto it = map.find(v.name());
            images.push_back(it == map.end() ? var(v.name()) : it->second);
        }
        MultiPoly acc;
        for (const Term& t : terms_) {
            MultiPoly m{t.coeff};
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (t.exp[v]) m = m * images[v].pow(t.exp[v]);
            acc = acc + m;
        }
        return acc;
    }

    // Positive rational c with p = c * (integer-coprime-coefficient polynomial);
    // zero for the zero polynomial.
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        mpz_class g(0), l(1);
        for (const Term& t : terms_) {
            mpz_class n = t.coeff.num();
            mpz_class d = t.coeff.den();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        return Rational(g, l);
    }

    // Canonical representative of the sign/scalar class: integer-primitive
    // coefficients, positive leading coefficient.
    MultiPoly sign_scalar_rep() const {
        if (is_zero()) return MultiPoly();
        Rational c = content();
        if (leading_coeff().sign() < 0) c = -c;
        return scale(c.inverse());
    }

    // Total order usable for sorting and dedup; refines structural equality.
    static int compare(const MultiPoly& x, const MultiPoly& y) {
        std::size_t nv = std::min(x.vars_.size(), y.vars_.size());
        for (std::size_t i = 0; i < nv; ++i) {
            if (x.vars_[i] != y.vars_[i]) return x.vars_[i].precedes(y.vars_[i]) ? -1 : 1;
        }
        if (x.vars_.size() != y.vars_.size()) return x.vars_.size() < y.vars_.size() ? -1 : 1;
        std::size_t nt = std::min(x.terms_.size(), y.terms_.size());
        for (std::size_t i = 0; i < nt; ++i) {
            int c = cmp_exp(x.terms_[i].exp, y.terms_[i].exp);
            if (c != 0) return c;
            if (x.terms_[i].coeff != y.terms_[i].coeff)
                return x.terms_[i].coeff < y.terms_[i].coeff ? -1 : 1;
        }
        if (x.terms_.size() != y.terms_.size()) return x.terms_.size() < y.terms_.size() ? -1 : 1;
        return 0;
    }

    bool operator<(const MultiPoly& o) const { return compare(*this, o) < 0; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const Term& t : terms_) {
            bool neg = t.coeff.sign() < 0;
            Rational mag = t.coeff.abs();
            std::string mono;
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                if (!t.exp[v]) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[v].name();
                if (t.exp[v] > 1) mono += "^" + std::to_string(t.exp[v]);
            }
            std::string body;
            if (mono.empty()) {
                body = mag.str();
            } else if (mag.is_one()) {
                body = mono;
            } else {
                body = mag.str() + "*" + mono;
            }
            if (first) {
                out += (neg ? "-" : "") + body;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    static unsigned degree_of(const Exponents& e) {
        unsigned d = 0;
        for (std::uint32_t x : e) d += x;
        return d;
    }

    // graded lex over aligned exponent vectors; >0 when a is the larger monomial
    static int cmp_exp(const Exponents& a, const Exponents& b) {
        unsigned da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        return 0;
    }

    // merged ascending variable set plus both term lists remapped onto it
    static std::tuple<std::vector<Sym>, std::vector<Term>, std::vector<Term>> unify(
        const MultiPoly& x, const MultiPoly& y) {
        std::vector<Sym> vars;
        vars.reserve(x.vars_.size() + y.vars_.size());
        std::size_t i = 0, j = 0;
        while (i < x.vars_.size() || j < y.vars_.size()) {
            if (j == y.vars_.size() ||
                (i < x.vars_.size() && x.vars_[i].precedes(y.vars_[j]))) {
                vars.push_back(x.vars_[i++]);
            } else if (i == x.vars_.size() || y.vars_[j].precedes(x.vars_[i])) {
                vars.push_back(y.vars_[j++]);
            } else {
                vars.push_back(x.vars_[i]);
                ++i;
                ++j;
            }
        }
        return {vars, remap(x, vars), remap(y, vars)};
    }

    static std::vector<Term> remap(const MultiPoly& p, const std::vector<Sym>& vars) {
        std::vector<std::size_t> pos(p.vars_.size());
        for (std::size_t i = 0; i < p.vars_.size(); ++i) {
            pos[i] = static_cast<std::size_t>(
                std::find_if(vars.begin(), vars.end(),
                             [&](Sym s) { return s == p.vars_[i]; }) -
                vars.begin());
        }
        std::vector<Term> out;
        out.reserve(p.terms_.size());
        for (const Term& t : p.terms_) {
            Term nt;
            nt.exp.assign(vars.size(), 0);
            for (std::size_t i = 0; i < p.vars_.size(); ++i) nt.exp[pos[i]] = t.exp[i];
            nt.coeff = t.coeff;
            out.push_back(std::move(nt));
        }
        return out;
    }

    // sort descending, combine equal monomials, drop zeros and unused variables
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return cmp_exp(a.exp, b.exp) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (Term& t : terms_) {
            if (!out.empty() && cmp_exp(out.back().exp, t.exp) == 0) {
                out.back().coeff += t.coeff;
            } else {
                out.push_back(std::move(t));
            }
        }
        terms_.clear();
        for (Term& t : out)
            if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
        compress();
    }

    // drop variables with zero exponent everywhere
    void compress() {
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (const Term& t : terms_)
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (t.exp[v]) used[v] = true;
        bool all = true;
        for (bool u : used) all = all && u;
        if (all && !terms_.empty()) return;
        std::vector<Sym> nv;
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (used[v]) nv.push_back(vars_[v]);
        for (Term& t : terms_) {
            Exponents ne;
            ne.reserve(nv.size());
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (used[v]) ne.push_back(t.exp[v]);
            t.exp = std::move(ne);
        }
        vars_ = std::move(nv);
    }

    std::vector<Sym> vars_;
    std::vector<Term> terms_;
};

}  // namespace rbq
