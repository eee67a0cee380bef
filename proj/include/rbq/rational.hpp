#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "rbq/errors.hpp"

namespace rbq {

// Arbitrary-precision rational, always canonical: gcd-reduced, denominator
// positive, zero stored as 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
    Rational(long n, long d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned e) const {
        Rational r(1);
        Rational base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // "p" for integers, "p/q" otherwise
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

}  // namespace rbq
