#include "coarsekit/space.hpp"

#include "coarsekit/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace coarsekit {

void FiniteMetricSpace::finalize() {
    integral = true;
    for (const auto& r : dist)
        if (r.denominator() != 1) { integral = false; break; }
    if (integral) {
        idist.resize(dist.size());
        for (std::size_t k = 0; k < dist.size(); ++k)
            idist[k] = static_cast<std::int32_t>(dist[k].numerator());
    } else {
        idist.clear();
    }
}

void FiniteMetricSpace::validate_metric() const {
    const int n = size();
    if (static_cast<std::size_t>(n) * n != dist.size())
        throw InvalidInputError("distance table size does not match point count");
    if (basepoint < 0 || basepoint >= n) throw InvalidInputError("basepoint out of range");
    for (int i = 0; i < n; ++i) {
        if (d(i, i) != Rat(0)) throw InvalidInputError("nonzero self-distance at " + labels[i]);
        for (int j = 0; j < i; ++j) {
            if (d(i, j) != d(j, i))
                throw InvalidInputError("asymmetric distance between " + labels[i] + " and " + labels[j]);
            if (d(i, j) <= Rat(0))
                throw InvalidInputError("non-positive distance between distinct points " + labels[i] +
                                        " and " + labels[j]);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (d(i, j) + d(j, k) < d(i, k))
                    throw InvalidInputError("triangle inequality fails at (" + labels[i] + "," +
                                            labels[j] + "," + labels[k] + ")");
}

Rat FiniteMetricSpace::diameter() const {
    Rat m(0);
    for (const auto& r : dist) m = std::max(m, r);
    return m;
}

int GroupWindow::index_of(const Elem& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

namespace {

/// Word lengths of every element within BFS radius `limit`; closes early when
/// the whole (finite) group is exhausted. Caps total size.
std::map<Elem, int> bfs_word_lengths(const GroupFamily& fam, const GeneratingSet& S, int limit,
                                     std::int64_t cap, const char* cap_name) {
    std::map<Elem, int> dist;
    std::deque<Elem> queue;
    dist[fam.identity()] = 0;
    queue.push_back(fam.identity());
    while (!queue.empty()) {
        Elem g = std::move(queue.front());
        queue.pop_front();
        int dg = dist[g];
        if (dg == limit) continue;
        for (const Elem& s : S.elems) {
            Elem h = fam.mul(g, s);
            if (dist.emplace(std::move(h), dg + 1).second) {
                if (static_cast<std::int64_t>(dist.size()) > cap)
                    throw ResourceError(std::string("ball enumeration exceeded cap ") + cap_name +
                                        " = " + std::to_string(cap));
                queue.push_back(fam.mul(g, s));
            }
        }
    }
    return dist;
}

}  // namespace

GroupWindow build_window(const GroupFamily& family, const GeneratingSet& S, int L,
                         std::int64_t max_ball) {
    if (L < 0) throw InvalidInputError("window radius must be >= 0");
    if (!S.symmetrized) throw InvalidInputError("build_window requires a symmetrized generating set");
    for (const Elem& s : S.elems) family.check(s);

    auto lengths = bfs_word_lengths(family, S, L, max_ball, "max_ball_size");

    GroupWindow w;
    w.family = family;
    w.gens = S;
    w.radius = L;
    w.elems.reserve(lengths.size());
    for (const auto& [e, len] : lengths) w.elems.push_back(e);  // std::map: already lexicographic
    const int n = static_cast<int>(w.elems.size());
    for (int i = 0; i < n; ++i) w.index_[w.elems[i]] = i;

    auto& sp = w.space;
    sp.labels.resize(n);
    for (int i = 0; i < n; ++i) sp.labels[i] = family.str(w.elems[i]);
    sp.basepoint = w.index_of(family.identity());
    sp.dist.assign(static_cast<std::size_t>(n) * n, Rat(0));

    if (family.abelian()) {
        // d(g, h) = |g^{-1} h|_S, computed once for the whole 2L ball.
        auto wl = bfs_word_lengths(family, S, 2 * L, 4 * max_ball, "max_ball_size (difference table)");
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Elem diff = family.mul(family.inv(w.elems[i]), w.elems[j]);
                auto it = wl.find(diff);
                if (it == wl.end())
                    throw InvalidInputError("difference left the 2L ball; generating set may not generate");
                sp.dist[static_cast<std::size_t>(i) * n + j] = Rat(it->second);
                sp.dist[static_cast<std::size_t>(j) * n + i] = Rat(it->second);
            }
        }
        sp.window_internal = false;
    } else {
        // Shortest paths confined to the window's Cayley graph.
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < n; ++i)
            for (const Elem& s : S.elems) {
                int j = w.index_of(family.mul(w.elems[i], s));
                if (j >= 0 && j != i) adj[i].push_back(j);
            }
        std::vector<int> dvec(n);
        std::deque<int> queue;
        for (int src = 0; src < n; ++src) {
            std::fill(dvec.begin(), dvec.end(), -1);
            dvec[src] = 0;
            queue.clear();
            queue.push_back(src);
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : adj[u])
                    if (dvec[v] < 0) {
                        dvec[v] = dvec[u] + 1;
                        queue.push_back(v);
                    }
            }
            for (int j = 0; j < n; ++j) {
                if (dvec[j] < 0)
                    throw InvalidInputError("window Cayley graph is disconnected at " + sp.labels[j]);
                sp.dist[static_cast<std::size_t>(src) * n + j] = Rat(dvec[j]);
            }
        }
        sp.window_internal = true;
    }
    sp.finalize();
    return w;
}

CircleSpace circle_space(const Rat& R, int n) {
    if (n < 3) throw InvalidInputError("circle_space requires n >= 3");
    if (R <= Rat(0)) throw InvalidInputError("circle_space requires R > 0");
    CircleSpace c;
    c.circumference = R;
    c.npoints = n;
    auto& sp = c.space;
    sp.labels.resize(n);
    for (int i = 0; i < n; ++i) sp.labels[i] = "p" + std::to_string(i);
    sp.basepoint = 0;
    sp.dist.assign(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = std::abs(i - j);
            std::int64_t arc = std::min(k, n - k);
            sp.dist[static_cast<std::size_t>(i) * n + j] = R * Rat(arc, n);
        }
    sp.finalize();
    return c;
}

CircleChainSpace chain_of_circles(const std::vector<std::int64_t>& circumferences) {
    if (circumferences.empty()) throw InvalidInputError("chain_of_circles needs at least one circle");
    for (auto R : circumferences)
        if (R < 3) throw InvalidInputError("chain_of_circles requires integer circumferences >= 3");

    CircleChainSpace chain;
    chain.circumferences = circumferences;
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    for (std::size_t c = 0; c < circumferences.size(); ++c) {
        int base = n;
        chain.first_index.push_back(base);
        int R = static_cast<int>(circumferences[c]);
        for (int i = 0; i < R; ++i) {
            chain.factor_of.push_back(static_cast<int>(c));
            chain.pos_in_factor.push_back(i);
            edges.emplace_back(base + i, base + (i + 1) % R);
        }
        n += R;
        if (c + 1 < circumferences.size()) {
            // bridge midpoint between this circle's p0 and the next one's p0
            chain.factor_of.push_back(-1);
            chain.pos_in_factor.push_back(-1);
            edges.emplace_back(base, n);      // attach -> midpoint
            edges.emplace_back(n, n + 1);     // midpoint -> next attach
            n += 1;
        }
    }

    auto& sp = chain.space;
    sp.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        if (chain.factor_of[i] >= 0) {
            std::ostringstream os;
            os << 'c' << chain.factor_of[i] << 'p' << chain.pos_in_factor[i];
            sp.labels[i] = os.str();
        } else {
            sp.labels[i] = "b" + std::to_string(i);
        }
    }
    sp.basepoint = 0;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    sp.dist.assign(static_cast<std::size_t>(n) * n, Rat(0));
    std::vector<int> dvec(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dvec.begin(), dvec.end(), -1);
        dvec[src] = 0;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u])
                if (dvec[v] < 0) {
                    dvec[v] = dvec[u] + 1;
                    queue.push_back(v);
                }
        }
        for (int j = 0; j < n; ++j) sp.dist[static_cast<std::size_t>(src) * n + j] = Rat(dvec[j]);
    }
    sp.finalize();
    return chain;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

std::optional<Rat> rat_parse(const std::string& text) {
    std::int64_t num = 0, den = 1;
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) return std::nullopt;
        if (slash != std::string::npos) {
            den = std::stoll(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1) return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (den == 0) return std::nullopt;
    return Rat(num, den);
}

}  // namespace coarsekit
