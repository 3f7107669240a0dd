#pragma once

#include <cstdint>

namespace cssent {

// SplitMix64. Every random draw in the library flows through this generator so
// that results are identical across platforms and standard-library versions
// (std::uniform_int_distribution is implementation-defined).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) via rejection.
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return next() >> 63; }

  private:
    std::uint64_t state_;
};

// Seed fan-out: sample `stream` of a scan draws from derive_seed(master, stream),
// so serial and parallel runs produce byte-identical output.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    return mix.next();
}

} // namespace cssent
