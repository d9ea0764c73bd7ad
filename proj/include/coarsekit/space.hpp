#pragma once

#include "coarsekit/group.hpp"
#include "coarsekit/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coarsekit {

/// A finite pointed metric space with exact rational distances.
/// Point indices are canonical: constructions list points in lexicographic
/// order of their normal forms and all enumerations tie-break by index.
struct FiniteMetricSpace {
    std::vector<std::string> labels;
    std::vector<Rat> dist;  // n*n, symmetric, zero diagonal
    int basepoint = 0;
    /// Set when pairwise distances are window-confined shortest paths that may
    /// exceed the true group distance near the boundary.
    bool window_internal = false;
    /// Integer fast path, populated when every distance is integral.
    bool integral = false;
    std::vector<std::int32_t> idist;

    int size() const { return static_cast<int>(labels.size()); }
    const Rat& d(int i, int j) const { return dist[static_cast<std::size_t>(i) * labels.size() + j]; }
    std::int32_t di(int i, int j) const { return idist[static_cast<std::size_t>(i) * labels.size() + j]; }

    /// Fills the integer table when all entries are integral.
    void finalize();
    /// Checks symmetry, zero-iff-equal and the triangle inequality; throws
    /// InvalidInputError with a witness on violation.
    void validate_metric() const;
    Rat diameter() const;
};

/// The radius-L ball of a group family under the word metric of S.
struct GroupWindow {
    GroupFamily family;
    GeneratingSet gens;
    int radius = 0;
    std::vector<Elem> elems;  // index-aligned with space.labels
    FiniteMetricSpace space;

    int index_of(const Elem& e) const;
    int word_length(int idx) const { return space.di(space.basepoint, idx); }

  private:
    friend GroupWindow build_window(const GroupFamily&, const GeneratingSet&, int, std::int64_t);
    std::map<Elem, int> index_;
};

inline constexpr std::int64_t kDefaultMaxBall = 200000;

/// Enumerates {g : |g|_S <= L} by breadth-first closure under S. Distances are
/// exact word distances for abelian families, window-confined shortest paths
/// (flagged) otherwise. Throws ResourceError when the ball exceeds `max_ball`.
GroupWindow build_window(const GroupFamily& family, const GeneratingSet& S, int L,
                         std::int64_t max_ball = kDefaultMaxBall);

/// n points on a geodesic circle of circumference R; distance is the shorter
/// arc, exactly.
struct CircleSpace {
    Rat circumference;
    int npoints = 0;
    FiniteMetricSpace space;

    Rat position(int i) const { return circumference * Rat(i, npoints); }
};

/// Requires n >= 3 and R > 0.
CircleSpace circle_space(const Rat& R, int n);

/// Disjoint circles of integer circumference (one point per unit of arc),
/// chained by two-hop bridges between their attachment points. The metric is
/// the shortest-path metric of the resulting unit-edge graph; within one
/// circle it coincides with the arc metric. Collapsing everything outside one
/// circle to that circle's attachment point is 1-Lipschitz, which is what the
/// per-circle winding obstructions rely on.
struct CircleChainSpace {
    std::vector<std::int64_t> circumferences;
    FiniteMetricSpace space;
    std::vector<int> factor_of;      // -1 for bridge points
    std::vector<int> pos_in_factor;  // position on the circle, 0 = attachment
    std::vector<int> first_index;    // index of position 0 of each circle
};

CircleChainSpace chain_of_circles(const std::vector<std::int64_t>& circumferences);

}  // namespace coarsekit
