// Shared error taxonomy, deterministic hashing/RNG helpers.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace abel {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Thrown when an operation's preconditions on its inputs fail.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration-based operation would exceed the group cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an enumeration certificate that must hold fails to verify.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant is violated (a bug, not a usage error).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// FNV-1a over raw bytes; used for certificate target hashes.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64_i64(int64_t v, uint64_t seed) { return fnv1a64(&v, sizeof v, seed); }

// splitmix64: portable deterministic generator for seeded set/partition rules.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

}  // namespace abel
