#pragma once

#include <cstdint>
#include <vector>

#include "percsim/lattice.hpp"

namespace percsim {

/// Union-find with union by size, path compression, and per-node
/// displacement vectors to the parent. The displacement of a node relative
/// to its root is the node's position in an unrolled (cover-space)
/// coordinate frame of its cluster; when an edge closes a cycle, a nonzero
/// net winding means the cluster wraps around the periodic lattice.
///
/// Determinism: on equal component sizes the smaller root index wins, so
/// the forest is a pure function of the union sequence.
class WindingUnionFind {
public:
    /// All n nodes start as active singletons.
    explicit WindingUnionFind(std::uint32_t n) : WindingUnionFind(n, nullptr) {}

    /// Nodes with active[i] == 0 start with component size 0 and count as
    /// absent until activate() is called on them.
    WindingUnionFind(std::uint32_t n, const std::vector<std::uint8_t>* active) {
        parent_.resize(n);
        size_.resize(n);
        disp_.assign(n, {0, 0});
        largest_ = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            parent_[i] = i;
            const std::uint32_t s = (active == nullptr || active->empty() || (*active)[i]) ? 1 : 0;
            size_[i] = s;
            if (s > largest_) largest_ = s;
        }
    }

    struct FindResult {
        std::uint32_t root;
        BondVec disp;  // position of the queried node relative to root
    };

    FindResult find(std::uint32_t x) {
        // First pass: walk to the root, recording the path.
        path_.clear();
        std::uint32_t r = x;
        while (parent_[r] != r) {
            path_.push_back(r);
            r = parent_[r];
            ++find_steps_;
        }
        // Second pass: point every path node at the root with its net
        // displacement, accumulated root-ward.
        BondVec total{0, 0};
        for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
            const std::uint32_t n = *it;
            total = {disp_[n].dx + total.dx, disp_[n].dy + total.dy};
            parent_[n] = r;
            disp_[n] = total;
        }
        return {r, total};
    }

    struct UniteResult {
        bool merged;
        bool wrapped;  // the edge closed a cycle with nonzero winding
    };

    /// Add edge (u, v) whose bond vector from u to v is `b`.
    UniteResult unite(std::uint32_t u, std::uint32_t v, BondVec b) {
        auto [ru, du] = find(u);
        auto [rv, dv] = find(v);
        if (ru == rv) {
            const std::int32_t wx = du.dx + b.dx - dv.dx;
            const std::int32_t wy = du.dy + b.dy - dv.dy;
            return {false, wx != 0 || wy != 0};
        }
        if (size_[rv] > size_[ru] || (size_[rv] == size_[ru] && rv < ru)) {
            std::swap(ru, rv);
            std::swap(du, dv);
            b = {-b.dx, -b.dy};
        }
        parent_[rv] = ru;
        disp_[rv] = {du.dx + b.dx - dv.dx, du.dy + b.dy - dv.dy};
        size_[ru] += size_[rv];
        if (size_[ru] > largest_) largest_ = size_[ru];
        return {true, false};
    }

    /// Site percolation: bring an absent node in as a size-1 component.
    void activate(std::uint32_t v) {
        size_[v] = 1;
        if (largest_ == 0) largest_ = 1;
    }

    std::uint32_t largest() const { return largest_; }
    std::uint32_t component_size(std::uint32_t x) { return size_[find(x).root]; }
    std::uint64_t find_steps() const { return find_steps_; }
    std::uint32_t node_count() const { return static_cast<std::uint32_t>(parent_.size()); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<BondVec> disp_;
    std::vector<std::uint32_t> path_;
    std::uint32_t largest_ = 0;
    std::uint64_t find_steps_ = 0;
};

}  // namespace percsim
