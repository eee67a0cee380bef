#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbq/errors.hpp"
#include "rbq/multipoly.hpp"
#include "rbq/rational.hpp"

namespace rbq {

// Ratio of multivariate polynomials. The denominator is kept as a list of
// factors exactly as constructed (no multivariate gcd): each factor is
// non-constant, integer-primitive, with positive leading coefficient; signs
// and rational content are folded into the numerator. The value is zero on
// its domain iff the numerator is the zero polynomial.
class RatFunc {
public:
    RatFunc() = default;  // zero
    RatFunc(const MultiPoly& num) : num_(num) {}  // NOLINT: polynomials embed
    RatFunc(const Rational& c) : num_(MultiPoly(c)) {}  // NOLINT
    RatFunc(long n) : num_(MultiPoly(n)) {}  // NOLINT

    static RatFunc quotient(const MultiPoly& num, const MultiPoly& den) {
        RatFunc r(num);
        r.push_factor(den);
        return r;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }

    // requires is_constant()
    Rational constant_value() const { return num_.constant_value(); }

    const MultiPoly& numerator() const { return num_; }
    const std::vector<MultiPoly>& denominator_factors() const { return den_; }

    MultiPoly denominator() const {
        MultiPoly d{Rational(1)};
        for (const MultiPoly& f : den_) d = d * f;
        return d;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        std::vector<MultiPoly> lcm = factor_lcm(x.den_, y.den_);
        RatFunc r;
        r.num_ = x.num_ * factor_product(factor_diff(lcm, x.den_)) +
                 y.num_ * factor_product(factor_diff(lcm, y.den_));
        r.den_ = std::move(lcm);
        return r;
    }

    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        RatFunc r;
        r.num_ = x.num_ * y.num_;
        r.den_ = x.den_;
        r.den_.insert(r.den_.end(), y.den_.begin(), y.den_.end());
        std::sort(r.den_.begin(), r.den_.end());
        return r;
    }

    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
        if (y.is_zero()) throw DomainError("division by zero");
        RatFunc r;
        r.num_ = x.num_ * factor_product(y.den_);
        r.den_ = x.den_;
        r.push_factor_sorted(y.num_);
        return r;
    }

    RatFunc scale(const Rational& s) const {
        RatFunc r = *this;
        r.num_ = r.num_.scale(s);
        return r;
    }

    // equality as rational functions (cross-multiplied); independent of how
    // the denominators happen to be factored
    bool equals_value(const RatFunc& o) const {
        return num_ * o.denominator() == o.num_ * denominator();
    }

    friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.equals_value(y); }
    friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

    struct Cleared {
        MultiPoly numerator;
        std::vector<MultiPoly> nonzero_factors;  // distinct
    };

    // The denominator-clearing view: the numerator, plus the distinct factors
    // that must stay nonzero for the value to be defined.
    Cleared clear() const {
        Cleared c;
        c.numerator = num_;
        for (const MultiPoly& f : den_) {
            if (c.nonzero_factors.empty() || !(c.nonzero_factors.back() == f))
                c.nonzero_factors.push_back(f);
        }
        return c;
    }

    Rational eval(const std::map<std::string, Rational>& assignment) const {
        Rational d(1);
        for (const MultiPoly& f : den_) {
            Rational v = f.eval(assignment);
            if (v.is_zero())
                throw DomainError("denominator factor " + f.str() + " vanishes");
            d *= v;
        }
        return num_.eval(assignment) / d;
    }

    RatFunc substitute(const std::map<std::string, MultiPoly>& map) const {
        RatFunc r(num_.substitute(map));
        for (const MultiPoly& f : den_) {
            MultiPoly g = f.substitute(map);
            if (g.is_zero())
                throw DomainError("denominator factor " + f.str() +
                                  " vanishes identically under substitution");
            r.push_factor(g);
        }
        return r;
    }

    std::string str() const {
        if (den_.empty()) return num_.str();
        std::string out = "(" + num_.str() + ")";
        for (const MultiPoly& f : den_) out += "/(" + f.str() + ")";
        return out;
    }

private:
    // divide by f: constants fold into the numerator, anything else becomes a
    // primitive positive-lead factor
    void push_factor(const MultiPoly& f) {
        if (f.is_zero()) throw DomainError("division by zero polynomial");
        if (f.is_constant()) {
            num_ = num_.scale(f.constant_value().inverse());
            return;
        }
        Rational c = f.content();
        if (f.leading_coeff().sign() < 0) c = -c;
        num_ = num_.scale(c.inverse());
        den_.push_back(f.scale(c.inverse()));
    }

    void push_factor_sorted(const MultiPoly& f) {
        push_factor(f);
        std::sort(den_.begin(), den_.end());
    }

    static MultiPoly factor_product(const std::vector<MultiPoly>& fs) {
        MultiPoly p{Rational(1)};
        for (const MultiPoly& f : fs) p = p * f;
        return p;
    }

    // multiset lcm of two sorted factor lists (per-factor max multiplicity)
    static std::vector<MultiPoly> factor_lcm(const std::vector<MultiPoly>& a,
                                             const std::vector<MultiPoly>& b) {
        std::vector<MultiPoly> out;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] < b[j])) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j] < a[i]) {
                out.push_back(b[j++]);
            } else {
                out.push_back(a[i]);
                ++i;
                ++j;
            }
        }
        return out;
    }

    // multiset difference a \ b (both sorted); b must be contained in a
    static std::vector<MultiPoly> factor_diff(const std::vector<MultiPoly>& a,
                                              const std::vector<MultiPoly>& b) {
        std::vector<MultiPoly> out;
        std::size_t j = 0;
        for (const MultiPoly& f : a) {
            if (j < b.size() && b[j] == f) {
                ++j;
            } else {
                out.push_back(f);
            }
        }
        return out;
    }

    MultiPoly num_;
    std::vector<MultiPoly> den_;  // sorted canonical factors
};

}  // namespace rbq
