#pragma once
// Fixed 64-bit non-cryptographic hash (splitmix64 finalizer with a pinned
// seed). The identifier is recorded in reports; changing it changes every
// placement, so it is a format-level constant.

#include <cstdint>
#include <string_view>

namespace shardsim {

inline constexpr uint64_t kHashSeed = 0x5AFE5EEDCAFEF00DULL;
inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr std::string_view kHashId = "splitmix64-v1";

constexpr uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

constexpr uint64_t hash64(uint64_t x) { return mix64(x ^ kHashSeed); }

// Key hash mapped to the unit interval [0,1).
constexpr double unit_hash(uint64_t key) {
    return static_cast<double>(hash64(key) >> 11) * 0x1.0p-53;
}

constexpr uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 14695981039346656037ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace shardsim
