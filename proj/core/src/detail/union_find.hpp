#pragma once

#include <numeric>
#include <vector>

namespace lsg::detail {

// Union-find over 1..n with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1), size_(n + 1, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false when x and y were already joined.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry)
            return false;
        if (size_[rx] < size_[ry])
            std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        return true;
    }

    bool joined(int x, int y) { return find(x) == find(y); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

} // namespace lsg::detail
