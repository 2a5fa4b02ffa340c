#include "cot/policies.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cot {

std::string_view to_string(PolicyKind k) {
    switch (k) {
        case PolicyKind::LRU: return "lru";
        case PolicyKind::LFU: return "lfu";
        case PolicyKind::ARC: return "arc";
        case PolicyKind::LRU2: return "lru2";
        case PolicyKind::Perfect: return "perfect";
        case PolicyKind::CoT: return "cot";
    }
    return "lru";
}

// ---------------------------------------------------------------- LRU

LruPolicy::LruPolicy(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw std::invalid_argument("lru: capacity must be >= 1");
}

bool LruPolicy::access(Key k) {
    auto it = map_.find(k);
    if (it != map_.end()) {
        order_.splice(order_.begin(), order_, it->second);
        return true;
    }
    if (map_.size() >= capacity_) {
        map_.erase(order_.back());
        order_.pop_back();
    }
    order_.push_front(k);
    map_[k] = order_.begin();
    return false;
}

bool LruPolicy::erase(Key k) {
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    order_.erase(it->second);
    map_.erase(it);
    return true;
}

// ---------------------------------------------------------------- LFU

LfuPolicy::LfuPolicy(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw std::invalid_argument("lfu: capacity must be >= 1");
}

bool LfuPolicy::access(Key k) {
    if (const auto* node = heap_.find(k)) {
        heap_.update(k, node->prio + 1);
        return true;
    }
    if (heap_.size() >= capacity_) heap_.pop_root();
    heap_.push(k, 1, {});
    return false;
}

bool LfuPolicy::erase(Key k) { return heap_.erase(k); }

// ---------------------------------------------------------------- ARC

ArcPolicy::ArcPolicy(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw std::invalid_argument("arc: capacity must be >= 1");
}

std::size_t ArcPolicy::size() const { return t1_.size() + t2_.size(); }

std::list<Key>& ArcPolicy::list_of(Where w) {
    switch (w) {
        case Where::T1: return t1_;
        case Where::T2: return t2_;
        case Where::B1: return b1_;
        default: return b2_;
    }
}

void ArcPolicy::pull(Key k) {
    auto it = map_.find(k);
    list_of(it->second.where).erase(it->second.it);
    map_.erase(it);
}

void ArcPolicy::push_mru(Key k, Where w) {
    auto& lst = list_of(w);
    lst.push_front(k);
    map_[k] = Slot{w, lst.begin()};
}

// REPLACE(x, p): demote the LRU of T1 or T2 into its ghost list.
void ArcPolicy::replace(bool in_b2) {
    bool from_t1 = !t1_.empty() &&
                   (t1_.size() > p_ || (in_b2 && t1_.size() == p_));
    if (from_t1) {
        Key victim = t1_.back();
        pull(victim);
        push_mru(victim, Where::B1);
    } else {
        Key victim = t2_.back();
        pull(victim);
        push_mru(victim, Where::B2);
    }
}

bool ArcPolicy::access(Key k) {
    auto it = map_.find(k);
    if (it != map_.end()) {
        Where w = it->second.where;
        if (w == Where::T1 || w == Where::T2) {  // Case I: hit
            pull(k);
            push_mru(k, Where::T2);
            return true;
        }
        if (w == Where::B1) {  // Case II: ghost hit in B1
            std::size_t delta = std::max<std::size_t>(1, b2_.size() / b1_.size());
            p_ = std::min(capacity_, p_ + delta);
            replace(false);
            pull(k);
            push_mru(k, Where::T2);
            return false;
        }
        // Case III: ghost hit in B2
        std::size_t delta = std::max<std::size_t>(1, b1_.size() / b2_.size());
        p_ = (delta > p_) ? 0 : p_ - delta;
        replace(true);
        pull(k);
        push_mru(k, Where::T2);
        return false;
    }

    // Case IV: miss everywhere
    std::size_t l1 = t1_.size() + b1_.size();
    std::size_t total = l1 + t2_.size() + b2_.size();
    if (l1 == capacity_) {
        if (t1_.size() < capacity_) {
            Key lru = b1_.back();
            pull(lru);
            replace(false);
        } else {
            Key lru = t1_.back();  // B1 empty: drop the T1 LRU outright
            pull(lru);
        }
    } else if (l1 < capacity_ && total >= capacity_) {
        if (total == 2 * capacity_) {
            Key lru = b2_.back();
            pull(lru);
        }
        replace(false);
    }
    push_mru(k, Where::T1);
    return false;
}

bool ArcPolicy::erase(Key k) {
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    Where w = it->second.where;
    if (w != Where::T1 && w != Where::T2) return false;  // ghosts hold no value
    pull(k);
    return true;
}

// ---------------------------------------------------------------- LRU-2

Lru2Policy::Lru2Policy(std::size_t capacity, std::size_t history_size)
    : capacity_(capacity), history_size_(history_size) {
    if (capacity_ == 0) throw std::invalid_argument("lru2: capacity must be >= 1");
}

Lru2Policy::Frame Lru2Policy::frame_of(Key k, const Times& t) const {
    bool has_two = t.prev != 0;
    return Frame{has_two, has_two ? t.prev : t.last, t.last, k.id};
}

void Lru2Policy::ghost_remember(Key k, const Times& t) {
    if (history_size_ == 0) return;
    auto it = ghost_map_.find(k);
    if (it != ghost_map_.end()) {
        ghost_lru_.erase(it->second.second);
        ghost_map_.erase(it);
    }
    ghost_lru_.push_front(k);
    ghost_map_[k] = {t, ghost_lru_.begin()};
    while (ghost_map_.size() > history_size_) {
        ghost_map_.erase(ghost_lru_.back());
        ghost_lru_.pop_back();
    }
}

void Lru2Policy::evict_one() {
    Frame victim = *order_.begin();
    order_.erase(order_.begin());
    Key k{victim.id};
    auto it = resident_.find(k);
    ghost_remember(k, it->second);
    resident_.erase(it);
}

bool Lru2Policy::access(Key k) {
    ++clock_;
    auto it = resident_.find(k);
    if (it != resident_.end()) {
        order_.erase(frame_of(k, it->second));
        it->second.prev = it->second.last;
        it->second.last = clock_;
        order_.insert(frame_of(k, it->second));
        return true;
    }

    Times t;
    auto g = ghost_map_.find(k);
    if (g != ghost_map_.end()) {  // restore evicted-key history
        t = g->second.first;
        ghost_lru_.erase(g->second.second);
        ghost_map_.erase(g);
    }
    t.prev = t.last;
    t.last = clock_;

    if (resident_.size() >= capacity_) evict_one();
    resident_[k] = t;
    order_.insert(frame_of(k, t));
    return false;
}

bool Lru2Policy::erase(Key k) {
    auto it = resident_.find(k);
    if (it == resident_.end()) return false;
    order_.erase(frame_of(k, it->second));
    resident_.erase(it);
    return true;
}

// ---------------------------------------------------------------- Perfect

PerfectPolicy::PerfectPolicy(std::size_t capacity, const std::vector<Key>& ranking)
    : capacity_(capacity) {
    for (std::size_t i = 0; i < ranking.size(); ++i) rank_[ranking[i]] = i + 1;
}

bool PerfectPolicy::access(Key k) {
    if (rank_.empty()) return k.id >= 1 && k.id <= capacity_;
    auto it = rank_.find(k);
    return it != rank_.end() && it->second <= capacity_;
}

// ---------------------------------------------------------------- factory

std::unique_ptr<Policy> make_policy(PolicyKind kind, const PolicyConfig& cfg) {
    switch (kind) {
        case PolicyKind::LRU: return std::make_unique<LruPolicy>(cfg.capacity);
        case PolicyKind::LFU: return std::make_unique<LfuPolicy>(cfg.capacity);
        case PolicyKind::ARC: return std::make_unique<ArcPolicy>(cfg.capacity);
        case PolicyKind::LRU2:
            return std::make_unique<Lru2Policy>(cfg.capacity, cfg.history_size);
        case PolicyKind::Perfect:
            return std::make_unique<PerfectPolicy>(cfg.capacity, cfg.ranking);
        case PolicyKind::CoT:
            throw std::invalid_argument("cot is driven through CotCache, not make_policy");
    }
    throw std::invalid_argument("unknown policy kind");
}

double tpc_hit_rate(const std::vector<double>& probabilities, std::size_t c) {
    long double total = 0.0L;
    for (double p : probabilities) total += p;
    if (std::fabs(static_cast<double>(total) - 1.0) > 1e-9) {
        throw std::invalid_argument("tpc_hit_rate: probabilities must sum to 1");
    }
    long double head = 0.0L;
    std::size_t top = std::min(c, probabilities.size());
    for (std::size_t i = 0; i < top; ++i) head += probabilities[i];
    return static_cast<double>(head);
}

}  // namespace cot
