#pragma once

#include "coarsekit/rational.hpp"
#include "coarsekit/space.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coarsekit {

/// The 2-skeleton of the Rips complex R_t(X): an edge joins points at
/// distance <= t, a triangle fills three points pairwise at distance <= t.
/// This is a flag complex by construction, so a triple spans a triangle
/// exactly when its three edges are present; queries exploit that.
struct RipsComplex2 {
    Rat scale;
    const FiniteMetricSpace* space = nullptr;
    std::vector<std::pair<int, int>> edges;          // i < j, lexicographic
    std::vector<std::array<int, 3>> triangles;       // i < j < k, lexicographic

    int size() const { return space ? space->size() : 0; }
    bool adjacent(int i, int j) const {
        return bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63) & 1;
    }
    bool has_triangle(int i, int j, int k) const {
        return i != j && j != k && i != k && adjacent(i, j) && adjacent(j, k) && adjacent(i, k);
    }
    int degree(int i) const { return degree_[i]; }
    /// Neighbor indices of i in ascending order (i itself excluded).
    const std::vector<int>& neighbors(int i) const { return nbrs_[i]; }

    std::string to_dot() const;

  private:
    friend RipsComplex2 build_rips2(const FiniteMetricSpace&, const Rat&);
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> nbrs_;
};

RipsComplex2 build_rips2(const FiniteMetricSpace& space, const Rat& t);

/// Partition of the vertices by 1-skeleton connectivity; entry i is the
/// component id of vertex i, ids numbered by least contained vertex.
std::vector<int> connected_components(const RipsComplex2& complex);

int component_count(const std::vector<int>& partition);

}  // namespace coarsekit
