#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cot/hotness.hpp"

namespace cot {

// Binary min-heap over (key, priority, payload) with a hash index mapping
// each key to its heap slot. O(log n) sift, O(1) membership and lookup.
// Ties in priority are left in arbitrary structural order.
template <typename Payload>
class IndexedMinHeap {
public:
    struct Node {
        Key key;
        Hotness prio = 0;
        Payload payload{};
    };

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    bool contains(Key k) const { return index_.find(k) != index_.end(); }

    const Node& at(std::size_t pos) const { return nodes_[pos]; }
    const Node& root() const { return nodes_.front(); }

    const Node* find(Key k) const {
        auto it = index_.find(k);
        return it == index_.end() ? nullptr : &nodes_[it->second];
    }

    void push(Key k, Hotness prio, Payload payload) {
        nodes_.push_back(Node{k, prio, std::move(payload)});
        index_[k] = nodes_.size() - 1;
        sift_up(nodes_.size() - 1);
    }

    // Updates priority (and optionally payload) of an existing key.
    void update(Key k, Hotness prio) {
        std::size_t pos = index_.at(k);
        nodes_[pos].prio = prio;
        sift(pos);
    }

    void update(Key k, Hotness prio, Payload payload) {
        std::size_t pos = index_.at(k);
        nodes_[pos].prio = prio;
        nodes_[pos].payload = std::move(payload);
        sift(pos);
    }

    Node remove_at(std::size_t pos) {
        Node out = std::move(nodes_[pos]);
        index_.erase(out.key);
        std::size_t last = nodes_.size() - 1;
        if (pos != last) {
            nodes_[pos] = std::move(nodes_[last]);
            index_[nodes_[pos].key] = pos;
            nodes_.pop_back();
            sift(pos);
        } else {
            nodes_.pop_back();
        }
        return out;
    }

    Node pop_root() { return remove_at(0); }

    bool erase(Key k) {
        auto it = index_.find(k);
        if (it == index_.end()) return false;
        remove_at(it->second);
        return true;
    }

    void clear() {
        nodes_.clear();
        index_.clear();
    }

    // Applies f to every node's (key, prio, payload), then restores the heap.
    // Used by half-life decay; f must not touch keys.
    template <typename F>
    void rebuild(F&& f) {
        for (Node& n : nodes_) f(n);
        if (nodes_.size() < 2) return;
        for (std::size_t i = nodes_.size() / 2; i-- > 0;) sift_down(i);
    }

    // Full scan: heap property plus index bijection. Test support.
    bool check_structure() const {
        if (index_.size() != nodes_.size()) return false;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            auto it = index_.find(nodes_[i].key);
            if (it == index_.end() || it->second != i) return false;
            std::size_t l = 2 * i + 1, r = 2 * i + 2;
            if (l < nodes_.size() && nodes_[i].prio > nodes_[l].prio) return false;
            if (r < nodes_.size() && nodes_[i].prio > nodes_[r].prio) return false;
        }
        return true;
    }

private:
    void sift(std::size_t pos) {
        Key k = nodes_[pos].key;
        sift_up(pos);
        sift_down(index_.at(k));
    }

    void sift_up(std::size_t i) {
        while (i > 0) {
            std::size_t parent = (i - 1) / 2;
            if (nodes_[parent].prio <= nodes_[i].prio) break;
            swap_nodes(parent, i);
            i = parent;
        }
    }

    void sift_down(std::size_t i) {
        for (;;) {
            std::size_t l = 2 * i + 1, r = 2 * i + 2, m = i;
            if (l < nodes_.size() && nodes_[l].prio < nodes_[m].prio) m = l;
            if (r < nodes_.size() && nodes_[r].prio < nodes_[m].prio) m = r;
            if (m == i) break;
            swap_nodes(m, i);
            i = m;
        }
    }

    void swap_nodes(std::size_t a, std::size_t b) {
        std::swap(nodes_[a], nodes_[b]);
        index_[nodes_[a].key] = a;
        index_[nodes_[b].key] = b;
    }

    std::vector<Node> nodes_;
    std::unordered_map<Key, std::size_t, KeyHash> index_;
};

}  // namespace cot
