#include "coarsekit/rips.hpp"

#include <numeric>
#include <sstream>

namespace coarsekit {

RipsComplex2 build_rips2(const FiniteMetricSpace& space, const Rat& t) {
    if (t < Rat(0)) throw InvalidInputError("Rips scale must be nonnegative");
    RipsComplex2 c;
    c.scale = t;
    c.space = &space;
    const int n = space.size();
    c.words_ = (n + 63) / 64;
    c.bits_.assign(static_cast<std::size_t>(n) * c.words_, 0);
    c.degree_.assign(n, 0);
    c.nbrs_.assign(n, {});

    auto set_bit = [&](int i, int j) {
        c.bits_[static_cast<std::size_t>(i) * c.words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (space.d(i, j) <= t) {
                c.edges.emplace_back(i, j);
                set_bit(i, j);
                set_bit(j, i);
                ++c.degree_[i];
                ++c.degree_[j];
                c.nbrs_[i].push_back(j);
                c.nbrs_[j].push_back(i);
            }
    for (auto& v : c.nbrs_) std::sort(v.begin(), v.end());
    for (int i = 0; i < n; ++i)
        for (int j : c.nbrs_[i]) {
            if (j <= i) continue;
            for (int k : c.nbrs_[j])
                if (k > j && c.adjacent(i, k)) c.triangles.push_back({i, j, k});
        }
    std::sort(c.triangles.begin(), c.triangles.end());
    return c;
}

std::vector<int> connected_components(const RipsComplex2& complex) {
    const int n = complex.size();
    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = root;
        stack.assign(1, root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : complex.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = root;
                    stack.push_back(v);
                }
        }
    }
    // renumber by least contained vertex, densely
    std::vector<int> ids;
    for (int i = 0; i < n; ++i)
        if (comp[i] == i) ids.push_back(i);
    for (auto& x : comp)
        x = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
    return comp;
}

int component_count(const std::vector<int>& partition) {
    return partition.empty() ? 0 : 1 + *std::max_element(partition.begin(), partition.end());
}

std::string RipsComplex2::to_dot() const {
    std::ostringstream os;
    os << "graph rips {\n";
    for (int i = 0; i < size(); ++i)
        os << "  n" << i << " [label=\"" << space->labels[i] << "\"];\n";
    for (auto [i, j] : edges) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace coarsekit
