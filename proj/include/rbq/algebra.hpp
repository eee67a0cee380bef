#pragma once

#include <array>
#include <concepts>
#include <string>
#include <vector>

#include "rbq/parse.hpp"
#include "rbq/random.hpp"
#include "rbq/rational.hpp"

namespace rbq {

// Coefficient ring requirements: commutative ring with exact equality,
// embedding of the rationals, and a printable canonical form.
template <typename R>
concept Ring = std::regular<R> && requires(const R a, const R b, const Rational q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
    R(q);
};

// Split semi-quaternion with coordinates (c0,c1,c2,c3) over R, representing
// c0 + c1*e1 + c2*e2 + c3*e3 in the basis e0 = 1, e1, e2, e3 with
//   e1^2 = 1,  e2^2 = e3^2 = 0,
//   e1*e2 = e3 = -e2*e1,  e2*e3 = e3*e2 = 0,  e3*e1 = -e2 = -e1*e3.
template <Ring R>
struct SsqElement {
    std::array<R, 4> c{R(Rational(0)), R(Rational(0)), R(Rational(0)), R(Rational(0))};

    static SsqElement zero() { return SsqElement{}; }

    static SsqElement basis(int k) {
        SsqElement e;
        e.c[static_cast<std::size_t>(k)] = R(Rational(1));
        return e;
    }

    static SsqElement one() { return basis(0); }

    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }

    bool operator==(const SsqElement& o) const { return c == o.c; }
    bool operator!=(const SsqElement& o) const { return !(*this == o); }

    friend SsqElement operator+(const SsqElement& x, const SsqElement& y) {
        SsqElement r;
        for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] + y.c[k];
        return r;
    }

    friend SsqElement operator-(const SsqElement& x, const SsqElement& y) {
        SsqElement r;
        for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] - y.c[k];
        return r;
    }

    SsqElement operator-() const {
        SsqElement r;
        for (int k = 0; k < 4; ++k) r.c[k] = -c[k];
        return r;
    }

    std::string str() const {
        static const char* names[4] = {"", "e1", "e2", "e3"};
        std::string out;
        for (int k = 0; k < 4; ++k) {
            if (c[k].is_zero()) continue;
            std::string coeff = c[k].str();
            bool neg = !coeff.empty() && coeff[0] == '-';
            std::string mag = neg ? coeff.substr(1) : coeff;
            // rational literals stand bare; any other coefficient is parenthesized
            bool simple = mag.find_first_not_of("0123456789/") == std::string::npos;
            std::string body;
            if (k == 0) {
                body = simple ? mag : "(" + mag + ")";
            } else if (mag == "1") {
                body = names[k];
            } else {
                body = (simple ? mag : "(" + mag + ")") + std::string("*") + names[k];
            }
            if (out.empty()) {
                out = (neg ? "-" : "") + body;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
        }
        return out.empty() ? "0" : out;
    }
};

// Coordinates of each basis product: table[i][j] is the coordinate vector of
// e_i * e_j, entries in {-1, 0, 1}.
struct StructureConstants {
    std::array<std::array<std::array<int, 4>, 4>, 4> table;
};

inline const StructureConstants& structure_constants() {
    static const StructureConstants sc = [] {
        StructureConstants s{};
        auto set = [&](int i, int j, int k, int v) { s.table[i][j][k] = v; };
        for (int j = 0; j < 4; ++j) set(0, j, j, 1);  // e0 is the unit
        set(1, 0, 1, 1);                              // e1*e0 = e1
        set(1, 1, 0, 1);                              // e1^2  = 1
        set(1, 2, 3, 1);                              // e1*e2 = e3
        set(1, 3, 2, 1);                              // e1*e3 = e2
        set(2, 0, 2, 1);                              // e2*e0 = e2
        set(2, 1, 3, -1);                             // e2*e1 = -e3
        set(3, 0, 3, 1);                              // e3*e0 = e3
        set(3, 1, 2, -1);                             // e3*e1 = -e2
        return s;
    }();
    return sc;
}

// Bilinear expansion over the structure-constant table.
template <Ring R>
SsqElement<R> multiply(const SsqElement<R>& x, const SsqElement<R>& y) {
    const auto& t = structure_constants().table;
    SsqElement<R> r;
    for (int i = 0; i < 4; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (y.c[j].is_zero()) continue;
            for (int k = 0; k < 4; ++k) {
                if (t[i][j][k] == 1) {
                    r.c[k] = r.c[k] + x.c[i] * y.c[j];
                } else if (t[i][j][k] == -1) {
                    r.c[k] = r.c[k] - x.c[i] * y.c[j];
                }
            }
        }
    }
    return r;
}

// The same product written out per coordinate; kept as an independent second
// implementation so the table and the formulas can be checked against each
// other.
template <Ring R>
SsqElement<R> multiply_formula(const SsqElement<R>& x, const SsqElement<R>& y) {
    const auto& a = x.c;
    const auto& b = y.c;
    SsqElement<R> r;
    r.c[0] = a[0] * b[0] + a[1] * b[1];
    r.c[1] = a[1] * b[0] + a[0] * b[1];
    r.c[2] = a[2] * b[0] - a[3] * b[1] + a[0] * b[2] + a[1] * b[3];
    r.c[3] = a[3] * b[0] - a[2] * b[1] + a[1] * b[2] + a[0] * b[3];
    return r;
}

// p + s*q
template <Ring R>
SsqElement<R> add_scale(const SsqElement<R>& p, const SsqElement<R>& q, const R& s) {
    SsqElement<R> r;
    for (int k = 0; k < 4; ++k) r.c[k] = p.c[k] + s * q.c[k];
    return r;
}

inline SsqElement<RatFunc> parse_element(std::string_view text) {
    auto coords = parse_element_coords(text);
    SsqElement<RatFunc> e;
    e.c = coords;
    return e;
}

// Narrowing parse for inputs that must be numeric.
inline SsqElement<Rational> parse_rational_element(std::string_view text) {
    auto coords = parse_element_coords(text);
    SsqElement<Rational> e;
    for (int k = 0; k < 4; ++k) {
        if (!coords[k].is_constant())
            throw ParseError("element coordinate is not a rational constant", 0,
                             "rational coefficients");
        e.c[k] = coords[k].constant_value();
    }
    return e;
}

struct AssocViolation {
    // basis indices, or -1 for a randomized triple
    int i, j, k;
    std::string detail;
};

struct AssocReport {
    std::size_t basis_triples_checked = 0;
    std::size_t random_triples_checked = 0;
    std::vector<AssocViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Checks (e_i e_j) e_k = e_i (e_j e_k) on all 64 basis triples and on
// randomized rational triples. Violations are report content, never thrown.
inline AssocReport associativity_oracle(unsigned random_trials = 100,
                                        std::uint64_t seed = 20259) {
    AssocReport rep;
    using E = SsqElement<Rational>;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                E lhs = multiply(multiply(E::basis(i), E::basis(j)), E::basis(k));
                E rhs = multiply(E::basis(i), multiply(E::basis(j), E::basis(k)));
                ++rep.basis_triples_checked;
                if (!(lhs == rhs))
                    rep.violations.push_back(
                        AssocViolation{i, j, k, lhs.str() + " != " + rhs.str()});
            }
        }
    }
    Rng rng(seed);
    auto random_element = [&] {
        E e;
        for (int k = 0; k < 4; ++k) e.c[k] = rng.rational(9, 5);
        return e;
    };
    for (unsigned t = 0; t < random_trials; ++t) {
        E x = random_element(), y = random_element(), z = random_element();
        E lhs = multiply(multiply(x, y), z);
        E rhs = multiply(x, multiply(y, z));
        ++rep.random_triples_checked;
        if (!(lhs == rhs))
            rep.violations.push_back(AssocViolation{-1, -1, -1, x.str() + " ; " + y.str() +
                                                                    " ; " + z.str()});
    }
    return rep;
}

}  // namespace rbq
