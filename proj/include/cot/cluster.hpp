#pragma once

#include <cstdint>
#include <vector>

#include "cot/hotness.hpp"

namespace cot {

// Consistent-hash ring with virtual nodes. Positions come from
// mix64((shard << 32 | vnode) ^ kRingSalt); the salt keeps vnode inputs
// disjoint from the key-id domain hashed by shard_for. A key maps to the
// clockwise successor vnode (first position >= hash, wrapping).
// Immutable after construction and freely shareable across threads.
class HashRing {
public:
    static constexpr std::uint64_t kRingSalt = 0xD6E8FEB86659FD93ULL;

    HashRing(std::uint32_t shards, std::uint32_t vnodes_per_shard);

    // Explicit shard-id list, so removing a shard keeps the survivors'
    // vnode positions (the consistent-hashing churn property).
    HashRing(const std::vector<std::uint32_t>& shard_ids, std::uint32_t vnodes_per_shard);

    std::uint32_t shard_for(Key k) const;

    std::uint32_t shard_count() const { return shard_count_; }
    std::uint32_t vnodes_per_shard() const { return vnodes_; }
    std::size_t ring_size() const { return positions_.size(); }

    // For the linear-scan lookup oracle in tests.
    const std::vector<std::uint64_t>& positions() const { return positions_; }
    const std::vector<std::uint32_t>& owners() const { return owners_; }

private:
    void build(const std::vector<std::uint32_t>& shard_ids);

    std::vector<std::uint64_t> positions_;  // sorted
    std::vector<std::uint32_t> owners_;
    std::uint32_t shard_count_ = 0;
    std::uint32_t vnodes_ = 0;
};

// Forwarded-lookup counters per shard, for the current epoch and the run.
struct ShardLoad {
    explicit ShardLoad(std::size_t shards)
        : epoch(shards, 0), cumulative(shards, 0) {}

    void record(std::uint32_t shard) {
        ++epoch[shard];
        ++cumulative[shard];
    }

    void reset_epoch() { std::fill(epoch.begin(), epoch.end(), 0); }

    std::vector<std::uint64_t> epoch;
    std::vector<std::uint64_t> cumulative;
};

// Total cumulative load with a cache relative to the no-cache baseline.
// Throws std::invalid_argument on a zero baseline.
double relative_server_load(const ShardLoad& with_cache, const ShardLoad& baseline);

}  // namespace cot
