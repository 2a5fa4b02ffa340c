#pragma once

#include <cstddef>
#include <functional>

#include "cot/hotness.hpp"
#include "cot/indexed_heap.hpp"

namespace cot {

// Space-saving top-K hotness tracker: a capacity-bounded indexed min-heap
// over hotness. When a new key arrives at a full tracker, the minimum-hotness
// unpinned key is replaced and the newcomer inherits its counters, so the
// stored hotness always equals the Eq-1 value of the stored counters.
//
// The pin predicate marks keys that must survive replacement and shrink
// (the cache binds it to cache membership so that S_c stays a subset of S_k).
class Tracker {
public:
    using PinPredicate = std::function<bool(Key)>;

    explicit Tracker(std::size_t capacity, HotnessWeights weights = {},
                     PinPredicate pinned = {});

    // Algorithm 1. Returns the key's hotness after the access is applied.
    Hotness track_key(Key k, AccessType t);

    // Root hotness; 0 for an empty tracker.
    Hotness min_hotness() const;

    // Expansion keeps all entries; shrink evicts lowest-hotness unpinned
    // entries. Throws std::invalid_argument when new_capacity is zero or
    // smaller than the pinned-key count (the cache must shrink first).
    void resize(std::size_t new_capacity);

    // Halves every entry's counters (floor) and rebuilds the heap.
    void decay_half_life();

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return heap_.size(); }
    bool contains(Key k) const { return heap_.contains(k); }
    const HotnessWeights& weights() const { return weights_; }

    // nullptr when untracked.
    const HotnessEntry* entry_of(Key k) const;
    bool hotness_of(Key k, Hotness& out) const;

    void set_pin_predicate(PinPredicate pinned) { pinned_ = std::move(pinned); }

    // Full-scan validation: heap property, index bijection, capacity bound,
    // and stored hotness == Eq 1 of stored counters.
    bool check_invariants() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < heap_.size(); ++i) {
            const auto& n = heap_.at(i);
            f(n.key, n.payload, n.prio);
        }
    }

private:
    bool is_pinned(Key k) const { return pinned_ && pinned_(k); }

    // Position of the minimum-hotness unpinned node, or npos if all pinned.
    // Walks the heap in priority order from the root so only nodes at least
    // as hot as the answer are visited.
    std::size_t min_unpinned_pos() const;

    std::size_t capacity_;
    HotnessWeights weights_;
    PinPredicate pinned_;
    IndexedMinHeap<HotnessEntry> heap_;
};

}  // namespace cot
