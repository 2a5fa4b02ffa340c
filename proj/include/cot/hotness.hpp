#pragma once

#include <cstddef>
#include <cstdint>

#include "cot/hash.hpp"

namespace cot {

// Opaque 64-bit key identity. String keys are hashed into this domain before
// they reach the library; the workload generators emit rank-indexed ids
// (id 1 = hottest).
struct Key {
    std::uint64_t id = 0;

    friend bool operator==(Key a, Key b) { return a.id == b.id; }
    friend bool operator!=(Key a, Key b) { return a.id != b.id; }
};

struct KeyHash {
    std::size_t operator()(Key k) const noexcept {
        return static_cast<std::size_t>(mix64(k.id));
    }
};

enum class AccessType : std::uint8_t { Read, Update };

// Access weights as plain integers (fixed point with denominator 1), so heap
// ordering never depends on floating-point rounding.
struct HotnessWeights {
    std::uint64_t read_weight = 1;
    std::uint64_t update_weight = 1;
};

struct HotnessEntry {
    std::uint64_t read_count = 0;
    std::uint64_t update_count = 0;
};

// Signed: frequently updated keys drift negative and never displace read-hot
// keys. Exact for counters up to 2^40 with weights up to 2^10.
using Hotness = std::int64_t;

inline Hotness hotness(const HotnessEntry& e, const HotnessWeights& w) {
    return static_cast<Hotness>(e.read_count * w.read_weight) -
           static_cast<Hotness>(e.update_count * w.update_weight);
}

inline HotnessEntry apply_access(HotnessEntry e, AccessType t) {
    if (t == AccessType::Read) {
        ++e.read_count;
    } else {
        ++e.update_count;
    }
    return e;
}

}  // namespace cot
