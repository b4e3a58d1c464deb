#pragma once

#include <cstdint>

#include "hilbcoh/rational.hpp"

namespace hilbcoh {

/// splitmix64; self-contained so seeded runs are reproducible across
/// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] (inclusive); fine for test data.
    long next_long(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    /// Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational next_rational(long max_num, long max_den) {
        return make_rational(next_long(-max_num, max_num), next_long(1, max_den));
    }

private:
    std::uint64_t state_;
};

} // namespace hilbcoh
