#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace gallai {

/// Union-find with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
    std::size_t components() const { return components_; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

/// Union-find without path compression so unions can be undone in LIFO order.
class RollbackDisjointSet {
public:
    explicit RollbackDisjointSet(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    /// Merges the classes of a and b; always pushes one history entry.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            history_.push_back(-1);
            return;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        --components_;
        history_.push_back(b);
    }

    void undo() {
        const int b = history_.back();
        history_.pop_back();
        if (b < 0) return;
        const int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
        ++components_;
    }

    int components() const { return components_; }
    std::size_t checkpoint() const { return history_.size(); }
    void rollback(std::size_t mark) {
        while (history_.size() > mark) undo();
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    int components_;
};

}  // namespace gallai
