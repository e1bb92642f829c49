#pragma once

#include <cstdint>
#include <vector>

#include "jointdc/pmf.hpp"

namespace jointdc {

// splitmix64: fixed, platform-independent 64-bit generator. Used for every
// randomized computation so that a seed pins the output exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 significant bits.
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

    // Split off an independent stream.
    SplitMix64 split() { return SplitMix64(next() ^ 0x1234567890ABCDEFull); }

private:
    std::uint64_t state_;
};

// One symbol by inverse-CDF lookup.
inline int sample_symbol(const Pmf& p, SplitMix64& rng) {
    double u = rng.next_double();
    double acc = 0.0;
    const std::size_t k = p.alphabet_size();
    for (std::size_t x = 0; x + 1 < k; ++x) {
        acc += p(x);
        if (u < acc) return static_cast<int>(x);
    }
    return static_cast<int>(k - 1);
}

inline std::vector<int> sample_sequence(const Pmf& p, int n, SplitMix64& rng) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = sample_symbol(p, rng);
    return x;
}

}  // namespace jointdc
