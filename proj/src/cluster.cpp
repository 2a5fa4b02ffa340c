#include "cot/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cot {

HashRing::HashRing(std::uint32_t shards, std::uint32_t vnodes_per_shard)
    : vnodes_(vnodes_per_shard) {
    if (shards == 0) throw std::invalid_argument("ring: need at least one shard");
    std::vector<std::uint32_t> ids(shards);
    std::iota(ids.begin(), ids.end(), 0);
    build(ids);
}

HashRing::HashRing(const std::vector<std::uint32_t>& shard_ids,
                   std::uint32_t vnodes_per_shard)
    : vnodes_(vnodes_per_shard) {
    if (shard_ids.empty()) throw std::invalid_argument("ring: need at least one shard");
    build(shard_ids);
}

void HashRing::build(const std::vector<std::uint32_t>& shard_ids) {
    if (vnodes_ == 0) throw std::invalid_argument("ring: need at least one vnode per shard");
    shard_count_ = static_cast<std::uint32_t>(
        1 + *std::max_element(shard_ids.begin(), shard_ids.end()));

    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
    entries.reserve(shard_ids.size() * vnodes_);
    for (std::uint32_t sid : shard_ids) {
        for (std::uint32_t v = 0; v < vnodes_; ++v) {
            std::uint64_t input = (static_cast<std::uint64_t>(sid) << 32) | v;
            entries.emplace_back(mix64(input ^ kRingSalt), sid);
        }
    }
    std::sort(entries.begin(), entries.end());
    positions_.reserve(entries.size());
    owners_.reserve(entries.size());
    for (const auto& [pos, sid] : entries) {
        positions_.push_back(pos);
        owners_.push_back(sid);
    }
}

std::uint32_t HashRing::shard_for(Key k) const {
    std::uint64_t h = mix64(k.id);
    auto it = std::lower_bound(positions_.begin(), positions_.end(), h);
    std::size_t idx = (it == positions_.end()) ? 0 : static_cast<std::size_t>(it - positions_.begin());
    return owners_[idx];
}

double relative_server_load(const ShardLoad& with_cache, const ShardLoad& baseline) {
    std::uint64_t base = std::accumulate(baseline.cumulative.begin(),
                                         baseline.cumulative.end(), std::uint64_t{0});
    if (base == 0) throw std::invalid_argument("relative_server_load: zero baseline");
    std::uint64_t load = std::accumulate(with_cache.cumulative.begin(),
                                         with_cache.cumulative.end(), std::uint64_t{0});
    return static_cast<double>(load) / static_cast<double>(base);
}

}  // namespace cot
