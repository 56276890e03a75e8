#pragma once

#include <cstdint>

namespace cordring {

// SplitMix64. The verification suites must be byte-identical across runs and
// platforms for a given seed, so we avoid std:: distributions (their output
// is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Plain modulo; the bias is irrelevant here and
    // the result is reproducible everywhere.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

// Default seed for all published verification suites.
inline constexpr std::uint64_t kDefaultSeed = 20240915ULL;

} // namespace cordring
