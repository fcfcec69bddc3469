#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace netgrow {

// Deterministic PRNG used by all stochastic code. The engine is
// std::mt19937_64, whose output the standard pins bit for bit, and the
// bounded draw below uses only unsigned 64-bit arithmetic, so a seed
// produces the same stream on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n). Draws above the largest multiple of n are
    // rejected, keeping the result exactly uniform. n == 1 consumes nothing.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("RandomSource::below: n must be positive");
        if (n == 1) return 0;
        const std::uint64_t max = ~std::uint64_t{0};
        const std::uint64_t overhang = (max % n + 1) % n;  // 2^64 mod n
        const std::uint64_t limit = max - overhang;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x > limit);
        return x % n;
    }

    // Uniform element of an indexable sequence.
    template <class Seq>
    auto choice(const Seq& seq) -> decltype(seq[0]) {
        return seq[below(seq.size())];
    }

private:
    std::mt19937_64 engine_;
};

// Seed for realization `index` of an ensemble: the (index+1)-th output of a
// SplitMix64 sequence started at `master`. Each realization's seed depends
// only on (master, index), so execution order never changes results.
inline std::uint64_t derived_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace netgrow
