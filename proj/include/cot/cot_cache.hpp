#pragma once

#include <cstdint>
#include <functional>

#include "cot/indexed_heap.hpp"
#include "cot/tracker.hpp"

namespace cot {

using Value = std::uint64_t;  // opaque token; payload bytes are out of scope

// One serve() call's branch record, used by the harness for statistics.
struct ServeOutcome {
    Value value = 0;
    bool cache_hit = false;
    bool tracker_hit = false;  // key was tracked before this access
    bool was_cached = false;   // key was cached before this access
    bool promoted = false;     // this access inserted the key into the cache
    bool forwarded = false;    // a back-end lookup (or write) was issued
};

// CoT front-end cache: a capacity-C min-heap holding the exact top-C of the
// tracked keys. Reads promote a key when its hotness exceeds the cache root's
// (h_min); updates invalidate. Cached keys are pinned inside the tracker.
class CotCache {
public:
    using Backend = std::function<Value(Key)>;

    CotCache(std::size_t cache_capacity, std::size_t tracker_capacity,
             HotnessWeights weights = {});

    CotCache(const CotCache&) = delete;
    CotCache& operator=(const CotCache&) = delete;

    // Algorithm 2. The backend delegate is called exactly on read misses; if
    // it throws, the tracker keeps the access but the cache is untouched.
    ServeOutcome serve(Key k, AccessType t, const Backend& backend);

    // Removes k from the cache only (stays tracked). Returns prior presence.
    bool invalidate(Key k);

    // Shrink evicts ascending-hotness cached keys; they stay tracked.
    void resize_cache(std::size_t new_capacity);
    void resize_tracker(std::size_t new_capacity);

    // Applies (cache, tracker) capacities in an order that keeps the pinned
    // count admissible for the tracker.
    void resize(std::size_t new_cache, std::size_t new_tracker);

    // Halves all tracked counters and refreshes the cached mirrors.
    void decay_half_life();

    std::size_t cache_capacity() const { return cache_capacity_; }
    std::size_t cache_size() const { return cached_.size(); }
    bool is_cached(Key k) const { return cached_.contains(k); }
    Hotness cache_min_hotness() const { return cached_.empty() ? 0 : cached_.root().prio; }

    Tracker& tracker() { return tracker_; }
    const Tracker& tracker() const { return tracker_; }

    // S_c subset of S_k, both heap structures, and cached hotness mirroring
    // the tracker's value for the same key.
    bool check_invariants() const;

    template <typename F>
    void for_each_cached(F&& f) const {
        for (std::size_t i = 0; i < cached_.size(); ++i) {
            const auto& n = cached_.at(i);
            f(n.key, n.payload, n.prio);
        }
    }

private:
    void admit(Key k, Value v, Hotness h);

    std::size_t cache_capacity_;
    IndexedMinHeap<Value> cached_;
    Tracker tracker_;
};

}  // namespace cot
