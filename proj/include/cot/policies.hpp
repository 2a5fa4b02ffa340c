#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <set>
#include <unordered_map>
#include <vector>

#include "cot/hotness.hpp"
#include "cot/indexed_heap.hpp"

namespace cot {

enum class PolicyKind : std::uint8_t { LRU, LFU, ARC, LRU2, Perfect, CoT };

std::string_view to_string(PolicyKind k);

struct PolicyConfig {
    std::size_t capacity = 0;
    std::size_t history_size = 0;          // LRU2 ghost entries
    std::vector<Key> ranking;              // Perfect: rank 1 first; empty = id-is-rank
};

// Common surface for the reference replacement policies. access() serves one
// read (admitting on miss), erase() is the update-invalidate path.
class Policy {
public:
    virtual ~Policy() = default;
    virtual bool access(Key k) = 0;  // returns hit
    virtual bool erase(Key k) = 0;   // returns prior presence
    virtual std::size_t size() const = 0;
};

class LruPolicy : public Policy {
public:
    explicit LruPolicy(std::size_t capacity);
    bool access(Key k) override;
    bool erase(Key k) override;
    std::size_t size() const override { return map_.size(); }

private:
    std::size_t capacity_;
    std::list<Key> order_;  // front = most recent
    std::unordered_map<Key, std::list<Key>::iterator, KeyHash> map_;
};

class LfuPolicy : public Policy {
public:
    explicit LfuPolicy(std::size_t capacity);
    bool access(Key k) override;
    bool erase(Key k) override;
    std::size_t size() const override { return heap_.size(); }

private:
    struct None {};
    std::size_t capacity_;
    IndexedMinHeap<None> heap_;  // prio = frequency; new keys start at 1
};

// Canonical ARC(c): T1/T2 resident, B1/B2 ghost, integer adaptation target p.
class ArcPolicy : public Policy {
public:
    explicit ArcPolicy(std::size_t capacity);
    bool access(Key k) override;
    bool erase(Key k) override;
    std::size_t size() const override;

    std::size_t t1_size() const { return t1_.size(); }
    std::size_t t2_size() const { return t2_.size(); }
    std::size_t b1_size() const { return b1_.size(); }
    std::size_t b2_size() const { return b2_.size(); }

private:
    enum class Where : std::uint8_t { T1, T2, B1, B2 };
    struct Slot {
        Where where;
        std::list<Key>::iterator it;
    };

    void replace(bool in_b2);
    void pull(Key k);  // detach from its current list
    void push_mru(Key k, Where w);
    std::list<Key>& list_of(Where w);

    std::size_t capacity_;
    std::size_t p_ = 0;  // target size of T1
    std::list<Key> t1_, t2_, b1_, b2_;  // front = MRU
    std::unordered_map<Key, Slot, KeyHash> map_;
};

// LRU-2: evict the resident with the oldest second-most-recent access; keys
// with fewer than two accesses are evicted first, oldest single access first.
// Evicted keys keep their access history in a bounded LRU ghost list and get
// it back on re-admission.
class Lru2Policy : public Policy {
public:
    Lru2Policy(std::size_t capacity, std::size_t history_size);
    bool access(Key k) override;
    bool erase(Key k) override;
    std::size_t size() const override { return resident_.size(); }
    std::size_t history_count() const { return ghost_map_.size(); }

private:
    struct Times {
        std::uint64_t last = 0;
        std::uint64_t prev = 0;  // 0 = fewer than two accesses
    };
    struct Frame {
        bool has_two;
        std::uint64_t backward;  // prev when has_two, else last
        std::uint64_t last;
        std::uint64_t id;        // total-order tiebreak

        bool operator<(const Frame& o) const {
            if (has_two != o.has_two) return !has_two;
            if (backward != o.backward) return backward < o.backward;
            if (last != o.last) return last < o.last;
            return id < o.id;
        }
    };

    Frame frame_of(Key k, const Times& t) const;
    void evict_one();
    void ghost_remember(Key k, const Times& t);

    std::size_t capacity_;
    std::size_t history_size_;
    std::uint64_t clock_ = 0;
    std::unordered_map<Key, Times, KeyHash> resident_;
    std::set<Frame> order_;
    std::list<Key> ghost_lru_;  // front = most recently evicted
    std::unordered_map<Key, std::pair<Times, std::list<Key>::iterator>, KeyHash> ghost_map_;
};

// Omniscient reference: hit iff rank(k) <= capacity. Stateless.
class PerfectPolicy : public Policy {
public:
    PerfectPolicy(std::size_t capacity, const std::vector<Key>& ranking);
    bool access(Key k) override;
    bool erase(Key k) override { (void)k; return false; }
    std::size_t size() const override { return 0; }

private:
    std::size_t capacity_;
    std::unordered_map<Key, std::size_t, KeyHash> rank_;  // empty = id-is-rank
};

std::unique_ptr<Policy> make_policy(PolicyKind kind, const PolicyConfig& cfg);

// Analytic perfect-cache hit rate: the mass of the top-C probabilities.
// probabilities must be given hottest-first and sum to 1 within 1e-9.
double tpc_hit_rate(const std::vector<double>& probabilities, std::size_t c);

}  // namespace cot
