// Independent reference computations used by the tests. Nothing here calls
// into the code under test beyond reading plain data out of PlaneGraph.
#pragma once

#include "dualpath/plane_graph.hpp"
#include "dualpath/wiring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using dualpath::FaceId;
using dualpath::PlaneGraph;

inline long long choose2(long long n) { return n * (n - 1) / 2; }

// Adjacency from raw edge records, deduplicated.
inline std::vector<std::vector<FaceId>> face_adjacency(const PlaneGraph& g) {
    std::vector<std::set<FaceId>> adj(g.faces.size());
    for (const auto& e : g.edges) {
        adj[e.below].insert(e.above);
        adj[e.above].insert(e.below);
    }
    std::vector<std::vector<FaceId>> out;
    for (auto& s : adj) out.emplace_back(s.begin(), s.end());
    return out;
}

inline std::vector<int> bfs_distance(const std::vector<std::vector<FaceId>>& adj, const std::vector<FaceId>& src,
                                     const std::vector<char>& allowed = {}) {
    std::vector<int> d(adj.size(), -1);
    std::deque<FaceId> q;
    for (FaceId s : src) {
        d[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        FaceId f = q.front();
        q.pop_front();
        for (FaceId t : adj[f])
            if (d[t] < 0 && (allowed.empty() || allowed[t])) {
                d[t] = d[f] + 1;
                q.push_back(t);
            }
    }
    return d;
}

// Tree whose non-leaf vertices form a path.
inline bool is_caterpillar(const std::vector<FaceId>& nodes, const std::vector<std::vector<FaceId>>& adj) {
    if (nodes.size() <= 2) return true;
    std::set<FaceId> in(nodes.begin(), nodes.end());
    std::map<FaceId, int> deg;
    std::size_t arcs = 0;
    for (FaceId f : nodes)
        for (FaceId t : adj[f])
            if (in.count(t)) {
                ++deg[f];
                ++arcs;
            }
    if (arcs / 2 != nodes.size() - 1) return false;
    std::vector<char> allowed(adj.size(), 0);
    for (FaceId f : nodes) allowed[f] = 1;
    auto d = bfs_distance(adj, {nodes.front()}, allowed);
    for (FaceId f : nodes)
        if (d[f] < 0) return false;
    // Spine: non-leaves; each spine vertex has at most two spine neighbours.
    std::set<FaceId> spine;
    for (FaceId f : nodes)
        if (deg[f] > 1) spine.insert(f);
    for (FaceId f : spine) {
        int k = 0;
        for (FaceId t : adj[f]) k += spine.count(t) ? 1 : 0;
        if (k > 2) return false;
    }
    return true;
}

// Pairs (lower id, higher id) in swap order, or empty if the word is not a
// reduced word for the reversal.
inline std::vector<std::pair<int, int>> swap_sequence(int n, const std::vector<int>& word) {
    std::vector<int> wire(n);
    for (int i = 0; i < n; ++i) wire[i] = i;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> out;
    for (int g : word) {
        if (g < 1 || g >= n) return {};
        auto p = std::minmax(wire[g - 1], wire[g]);
        if (!seen.insert(p).second) return {};
        out.push_back(p);
        std::swap(wire[g - 1], wire[g]);
    }
    return out;
}

// Crossing order of lines y = m x + b by plain double sorting; ids follow the
// bottom-to-top order at x -> -inf (descending slope).
inline std::vector<std::pair<int, int>> line_crossing_order(const std::vector<std::pair<double, double>>& lines) {
    const int n = static_cast<int>(lines.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lines[a].first > lines[b].first; });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    std::vector<std::pair<double, std::pair<int, int>>> xs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = (lines[j].second - lines[i].second) / (lines[i].first - lines[j].first);
            xs.push_back({x, std::minmax(rank[i], rank[j])});
        }
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<int, int>> out;
    for (auto& [x, p] : xs) out.push_back(p);
    return out;
}

// Exhaustive simple-path search with no pruning. Only for tiny graphs.
inline int longest_simple_path(const std::vector<std::vector<FaceId>>& adj) {
    int best = 0;
    std::vector<char> used(adj.size(), 0);
    auto dfs = [&](auto&& self, FaceId f, int len) -> void {
        best = std::max(best, len);
        for (FaceId t : adj[f])
            if (!used[t]) {
                used[t] = 1;
                self(self, t, len + 1);
                used[t] = 0;
            }
    };
    for (FaceId s = 0; s < static_cast<FaceId>(adj.size()); ++s) {
        used[s] = 1;
        dfs(dfs, s, 1);
        used[s] = 0;
    }
    return best;
}

}  // namespace oracle
