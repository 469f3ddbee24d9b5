#pragma once

#include <cstdint>
#include <random>

#include "minsec/rational.hpp"

namespace minsec {

// Deterministic sampler. std::uniform_int_distribution is implementation
// defined, so draws go through plain modular reduction to keep identical
// seeds byte-identical across platforms.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed = 0) : eng_(seed) {}

    long long next_int(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("next_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(eng_() % span);
    }

    long long next_nonzero_int(long long lo, long long hi) {
        for (;;) {
            long long v = next_int(lo, hi);
            if (v != 0) return v;
        }
    }

    // Small rational with numerator in [-max_num, max_num] and denominator
    // from {1, 2, 3}.
    Rational next_rational(long long max_num = 9) {
        long long num = next_int(-max_num, max_num);
        long long den = next_int(1, 3);
        return make_rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace minsec
