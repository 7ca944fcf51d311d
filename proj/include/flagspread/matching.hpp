/* Copyright 2026 The flagspread Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/**
 * @file matching.hpp
 * @brief Line/hyperplane incidence graph of F^s and a deterministic perfect matching on it.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "subspace.hpp"

namespace flagspread {

/// Bipartite graph: lines on the left, hyperplanes on the right, an edge when the line lies in the hyperplane.
struct IncidenceGraph {
    std::vector<Subspace> left;
    std::vector<Subspace> right;
    std::vector<std::vector<std::size_t>> adjacency;  // ascending right indices per left vertex

    [[nodiscard]] std::size_t size() const { return left.size(); }

    /// Index of a line in canonical order; throws if @p l is not a left vertex.
    [[nodiscard]] std::size_t left_index(const Subspace& l) const { return find(left, l, "line"); }
    [[nodiscard]] std::size_t right_index(const Subspace& h) const { return find(right, h, "hyperplane"); }

   private:
    static std::size_t find(const std::vector<Subspace>& v, const Subspace& x, const char* what) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it == v.end() || !(*it == x)) throw std::invalid_argument(std::string(what) + " is not a vertex of the incidence graph");
        return static_cast<std::size_t>(it - v.begin());
    }
};

inline IncidenceGraph build_incidence_graph(const FieldPtr& field, unsigned s, std::uint64_t cap = kDefaultEnumerationCap) {
    if (s < 2) throw std::invalid_argument("incidence graph needs s >= 2");
    IncidenceGraph g;
    g.left = grassmannian(field, 1, s, cap);
    g.right = grassmannian(field, s - 1, s, cap);
    g.adjacency.resize(g.left.size());
    for (std::size_t i = 0; i < g.left.size(); ++i)
        for (std::size_t j = 0; j < g.right.size(); ++j)
            if (g.right[j].contains(g.left[i])) g.adjacency[i].push_back(j);
    return g;
}

/// map[i] is the hyperplane index matched to line i.
struct Matching {
    std::vector<std::size_t> map;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/**
 * @brief Perfect matching by Hopcroft-Karp.
 *
 * Free left vertices are processed from the lowest index up and neighbours are
 * scanned in ascending order, so the result depends only on @p g.
 * Throws std::runtime_error when no perfect matching exists.
 */
inline Matching perfect_matching(const IncidenceGraph& g) {
    const std::size_t nl = g.left.size(), nr = g.right.size();
    if (nl != nr) throw std::runtime_error("incidence graph sides differ in size; no perfect matching");
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> match_l(nl, kNone), match_r(nr, kNone), dist(nl);

    auto bfs = [&] {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t u = 0; u < nl; ++u) {
            if (match_l[u] == kNone) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : g.adjacency[u]) {
                const std::size_t w = match_r[v];
                if (w == kNone) found = true;
                else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    // iterative DFS along the BFS layers
    std::vector<std::size_t> next(nl);
    auto dfs = [&](std::size_t root) {
        std::vector<std::size_t> path{root};
        while (!path.empty()) {
            const std::size_t u = path.back();
            bool advanced = false;
            for (; next[u] < g.adjacency[u].size(); ++next[u]) {
                const std::size_t v = g.adjacency[u][next[u]];
                const std::size_t w = match_r[v];
                if (w == kNone) {
                    // augment along the path
                    std::size_t vv = v;
                    for (std::size_t i = path.size(); i-- > 0;) {
                        const std::size_t uu = path[i];
                        const std::size_t prev = match_l[uu];
                        match_l[uu] = vv;
                        match_r[vv] = uu;
                        vv = prev;
                    }
                    return true;
                }
                if (dist[w] == dist[u] + 1) {
                    ++next[u];
                    path.push_back(w);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                dist[u] = kInf;
                path.pop_back();
            }
        }
        return false;
    };

    std::size_t matched = 0;
    while (bfs()) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t u = 0; u < nl; ++u)
            if (match_l[u] == kNone && dfs(u)) ++matched;
    }
    if (matched != nl) throw std::runtime_error("incidence graph has no perfect matching; graph is corrupted");
    return Matching{std::move(match_l)};
}

/// Bijectivity plus containment of every matched line in its hyperplane.
inline bool validate_matching(const IncidenceGraph& g, const Matching& m) {
    if (m.map.size() != g.left.size() || g.left.size() != g.right.size()) return false;
    std::vector<bool> used(g.right.size(), false);
    for (std::size_t i = 0; i < m.map.size(); ++i) {
        const std::size_t j = m.map[i];
        if (j >= g.right.size() || used[j]) return false;
        used[j] = true;
        if (!g.right[j].contains(g.left[i])) return false;
    }
    return true;
}

/// A matching given as explicit (line, hyperplane) pairs, in any order.
inline Matching matching_from_pairs(const IncidenceGraph& g, const std::vector<std::pair<Subspace, Subspace>>& pairs) {
    if (pairs.size() != g.left.size())
        throw std::invalid_argument("matching lists " + std::to_string(pairs.size()) + " pairs, expected " +
                                    std::to_string(g.left.size()));
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    Matching m{std::vector<std::size_t>(g.left.size(), kNone)};
    for (const auto& [line, hyper] : pairs) {
        const std::size_t i = g.left_index(line);
        if (m.map[i] != kNone) throw std::invalid_argument("line listed twice in matching");
        m.map[i] = g.right_index(hyper);
    }
    return m;
}

}  // namespace flagspread
