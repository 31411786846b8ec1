#pragma once

#include <cstdint>

namespace tanhvol {

/// Counter-based generator built on the SplitMix64 finalizer: every draw is
/// a pure function of (seed, stream, index), so samples can be produced in
/// any order, by any number of workers, with identical results.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Raw 64-bit draw number `index` of `stream`.
    constexpr std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const {
        std::uint64_t z = seed_ + kGamma * (mix(stream + 1) + index);
        return mix(z);
    }

    /// Uniform double in the half-open interval (0, 1].
    constexpr double uniform_open(std::uint64_t stream, std::uint64_t index) const {
        return static_cast<double>((bits(stream, index) >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform double in (lo, hi].
    constexpr double uniform(std::uint64_t stream, std::uint64_t index, double lo, double hi) const {
        return lo + uniform_open(stream, index) * (hi - lo);
    }

    /// Uniform integer in [1, n]. The 2^64 modulo bias is ~n/2^64 and
    /// irrelevant at the lattice sizes used here.
    constexpr std::uint64_t uniform_index(std::uint64_t stream, std::uint64_t index,
                                          std::uint64_t n) const {
        return 1 + bits(stream, index) % n;
    }

    constexpr std::uint64_t seed() const { return seed_; }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += kGamma;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

}  // namespace tanhvol
