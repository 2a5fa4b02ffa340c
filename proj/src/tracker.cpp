#include "cot/tracker.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cot {

Tracker::Tracker(std::size_t capacity, HotnessWeights weights, PinPredicate pinned)
    : capacity_(capacity), weights_(weights), pinned_(std::move(pinned)) {
    if (capacity_ == 0) throw std::invalid_argument("tracker capacity must be >= 1");
}

Hotness Tracker::track_key(Key k, AccessType t) {
    if (const auto* node = heap_.find(k)) {
        HotnessEntry e = apply_access(node->payload, t);
        Hotness h = hotness(e, weights_);
        heap_.update(k, h, e);
        return h;
    }

    HotnessEntry start{};
    if (heap_.size() >= capacity_) {
        std::size_t victim = min_unpinned_pos();
        if (victim == static_cast<std::size_t>(-1)) {
            // Every slot pinned; cannot replace. Unreachable while the cache
            // keeps K >= 2C, but don't corrupt the heap if a caller gets here.
            return hotness(apply_access(start, t), weights_);
        }
        start = heap_.remove_at(victim).payload;  // inherit the victim's counters
    }
    HotnessEntry e = apply_access(start, t);
    Hotness h = hotness(e, weights_);
    heap_.push(k, h, e);
    return h;
}

Hotness Tracker::min_hotness() const {
    return heap_.empty() ? 0 : heap_.root().prio;
}

void Tracker::resize(std::size_t new_capacity) {
    if (new_capacity == 0) throw std::invalid_argument("tracker capacity must be >= 1");
    if (new_capacity < heap_.size()) {
        std::size_t pinned_count = 0;
        for (std::size_t i = 0; i < heap_.size(); ++i) {
            if (is_pinned(heap_.at(i).key)) ++pinned_count;
        }
        if (new_capacity < pinned_count) {
            throw std::invalid_argument(
                "tracker capacity below pinned-key count; shrink the cache first");
        }
        while (heap_.size() > new_capacity) {
            std::size_t victim = min_unpinned_pos();
            heap_.remove_at(victim);
        }
    }
    capacity_ = new_capacity;
}

void Tracker::decay_half_life() {
    heap_.rebuild([this](IndexedMinHeap<HotnessEntry>::Node& n) {
        n.payload.read_count /= 2;
        n.payload.update_count /= 2;
        n.prio = hotness(n.payload, weights_);
    });
}

const HotnessEntry* Tracker::entry_of(Key k) const {
    const auto* node = heap_.find(k);
    return node ? &node->payload : nullptr;
}

bool Tracker::hotness_of(Key k, Hotness& out) const {
    const auto* node = heap_.find(k);
    if (!node) return false;
    out = node->prio;
    return true;
}

std::size_t Tracker::min_unpinned_pos() const {
    if (heap_.empty()) return static_cast<std::size_t>(-1);
    if (!is_pinned(heap_.root().key)) return 0;

    // Pop positions in ascending priority; the first unpinned one is the
    // global minimum among unpinned nodes.
    using Item = std::pair<Hotness, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    frontier.push({heap_.root().prio, 0});
    while (!frontier.empty()) {
        auto [prio, pos] = frontier.top();
        frontier.pop();
        if (!is_pinned(heap_.at(pos).key)) return pos;
        std::size_t l = 2 * pos + 1, r = 2 * pos + 2;
        if (l < heap_.size()) frontier.push({heap_.at(l).prio, l});
        if (r < heap_.size()) frontier.push({heap_.at(r).prio, r});
    }
    return static_cast<std::size_t>(-1);
}

bool Tracker::check_invariants() const {
    if (heap_.size() > capacity_) return false;
    if (!heap_.check_structure()) return false;
    for (std::size_t i = 0; i < heap_.size(); ++i) {
        const auto& n = heap_.at(i);
        if (n.prio != hotness(n.payload, weights_)) return false;
    }
    return true;
}

}  // namespace cot
