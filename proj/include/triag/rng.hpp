#pragma once

#include <cstdint>

#include "triag/rat.hpp"

namespace triag {

// Deterministic splitmix64 stream. Every randomized routine takes an
// explicit seed; parallel loops derive one independent stream per work item
// so results do not depend on scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent substream for work item `index` of the stream `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return mix;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    // Rational with |value| <= bound, denominator <= max_den.
    Rat rational(std::int64_t bound, std::int64_t max_den = 1000) {
        Rat q(uniform(-bound, bound), uniform(1, max_den));
        q.canonicalize();
        return q;
    }

    // Nonzero small rational, handy for algebra parameters.
    Rat nonzero_rational(std::int64_t bound = 9, std::int64_t max_den = 4) {
        for (;;) {
            Rat q = rational(bound, max_den);
            if (q != 0) return q;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace triag
