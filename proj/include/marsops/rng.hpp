#pragma once

#include <cstdint>
#include <string_view>

namespace marsops {

// Deterministic, platform-stable PRNG (splitmix64). Used instead of
// <random> engines so that replay digests do not depend on the standard
// library implementation.
class Substream {
public:
    explicit Substream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

    std::uint32_t next_below(std::uint32_t n) {
        return n == 0 ? 0 : static_cast<std::uint32_t>(next_u64() % n);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x00000100000001b3ull;
    }
    return h;
}

// Named substream of a run seed. Each named stream is independent, so
// toggling a factor that consumes one stream does not perturb the others.
inline Substream substream(std::uint64_t run_seed, std::string_view name) {
    std::uint64_t mixed = fnv1a64(name) ^ (run_seed * 0x9e3779b97f4a7c15ull);
    return Substream(mixed);
}

}  // namespace marsops
