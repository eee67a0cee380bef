#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rbq/rational.hpp"

namespace rbq {

// Seeded generator with platform-independent draws (mt19937_64 is fully
// specified; std distributions are not, so bounded draws are done by hand).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    std::uint64_t below(std::uint64_t n) { return n ? g_() % n : 0; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // numerator in [-max_num, max_num], denominator in [1, max_den]
    Rational rational(long max_num, long max_den) {
        return Rational(range(-max_num, max_num), range(1, max_den));
    }

    Rational nonzero_rational(long max_num, long max_den) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

private:
    std::mt19937_64 g_;
};

}  // namespace rbq
