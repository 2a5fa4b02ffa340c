#include "cot/cot_cache.hpp"

namespace cot {

CotCache::CotCache(std::size_t cache_capacity, std::size_t tracker_capacity,
                   HotnessWeights weights)
    : cache_capacity_(cache_capacity),
      tracker_(tracker_capacity, weights,
               [this](Key k) { return cached_.contains(k); }) {}

ServeOutcome CotCache::serve(Key k, AccessType t, const Backend& backend) {
    ServeOutcome out;
    out.tracker_hit = tracker_.contains(k);
    out.was_cached = cached_.contains(k);

    if (t == AccessType::Update) {
        tracker_.track_key(k, t);
        cached_.erase(k);  // invalidate; the write itself always forwards
        out.forwarded = true;
        return out;
    }

    Hotness h = tracker_.track_key(k, AccessType::Read);

    if (out.was_cached) {
        out.cache_hit = true;
        out.value = cached_.find(k)->payload;
        cached_.update(k, h);  // refresh the mirrored hotness and heap slot
        return out;
    }

    out.forwarded = true;
    out.value = backend(k);

    if (cache_capacity_ == 0 || !tracker_.contains(k)) return out;
    if (cached_.size() < cache_capacity_) {
        admit(k, out.value, h);
        out.promoted = true;
    } else if (h > cached_.root().prio) {
        cached_.pop_root();  // evicted key stays tracked, value discarded
        admit(k, out.value, h);
        out.promoted = true;
    }
    return out;
}

bool CotCache::invalidate(Key k) { return cached_.erase(k); }

void CotCache::resize_cache(std::size_t new_capacity) {
    while (cached_.size() > new_capacity) cached_.pop_root();
    cache_capacity_ = new_capacity;
}

void CotCache::resize_tracker(std::size_t new_capacity) {
    tracker_.resize(new_capacity);
}

void CotCache::resize(std::size_t new_cache, std::size_t new_tracker) {
    if (new_cache <= cache_capacity_) {
        resize_cache(new_cache);
        resize_tracker(new_tracker);
    } else {
        resize_tracker(new_tracker);
        resize_cache(new_cache);
    }
}

void CotCache::decay_half_life() {
    tracker_.decay_half_life();
    cached_.rebuild([this](IndexedMinHeap<Value>::Node& n) {
        Hotness h = 0;
        tracker_.hotness_of(n.key, h);
        n.prio = h;
    });
}

void CotCache::admit(Key k, Value v, Hotness h) { cached_.push(k, h, v); }

bool CotCache::check_invariants() const {
    if (cached_.size() > cache_capacity_) return false;
    if (!cached_.check_structure()) return false;
    if (!tracker_.check_invariants()) return false;
    for (std::size_t i = 0; i < cached_.size(); ++i) {
        Hotness h = 0;
        if (!tracker_.hotness_of(cached_.at(i).key, h)) return false;  // S_c ⊆ S_k
        if (h != cached_.at(i).prio) return false;                     // mirror
    }
    return true;
}

}  // namespace cot
