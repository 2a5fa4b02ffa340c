#pragma once

#include <cstdint>

namespace cot {

// SplitMix64 finalizer (Stafford variant 13). Seed-free, stable across
// platforms and versions; golden-file tests depend on these exact constants.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace cot
