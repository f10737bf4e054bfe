#include "dualpath/error.hpp"
#include "dualpath/longpath.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace dualpath {

std::vector<FaceStatus> classify_faces(const PlaneGraph& g, const PathFamily& family) {
    std::vector<FaceStatus> status(g.faces.size(), FaceStatus::NotTraversed);
    for (const auto& p : family.paths)
        for (FaceId f : p) status[f] = FaceStatus::Traversed;
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f)
        if (!g.faces[f].bounded()) status[f] = FaceStatus::Unbounded;
    return status;
}

bool is_glueable(const PlaneGraph& g, const PathFamily& family, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<int> owner(g.faces.size(), -1);
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        const auto& p = family.paths[i];
        if (p.empty()) return fail("path " + std::to_string(i + 1) + " is empty");
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (owner[p[k]] != -1)
                return fail("face " + std::to_string(p[k]) + " used by paths " + std::to_string(owner[p[k]] + 1) +
                            " and " + std::to_string(i + 1));
            owner[p[k]] = static_cast<int>(i);
            if (k + 1 < p.size() && !g.adjacent(p[k], p[k + 1]))
                return fail("path " + std::to_string(i + 1) + " breaks between faces " + std::to_string(p[k]) +
                            " and " + std::to_string(p[k + 1]));
        }
    }
    for (std::size_t i = 0; i + 1 < family.paths.size(); ++i) {
        const auto& a = family.paths[i];
        const auto& b = family.paths[i + 1];
        const bool odd = (i + 1) % 2 == 1;
        const FaceId x = odd ? a.back() : a.front();
        const FaceId y = odd ? b.back() : b.front();
        if (!g.adjacent(x, y))
            return fail(std::string(odd ? "ends" : "starts") + " of paths " + std::to_string(i + 1) + " and " +
                        std::to_string(i + 2) + " are not adjacent");
    }
    return true;
}

namespace {

// Unique path inside one tunnel; tunnel edges are exactly the edges whose
// faces share the tunnel.
std::vector<FaceId> tunnel_path(const PlaneGraph& g, const TunnelDecomposition& td, FaceId from, FaceId to) {
    const int t = td.face_tunnel[from];
    if (td.face_tunnel[to] != t) throw InternalInvariantError("tunnel path endpoints lie in different tunnels");
    std::unordered_map<FaceId, FaceId> parent{{from, from}};
    std::deque<FaceId> queue{from};
    while (!queue.empty()) {
        FaceId f = queue.front();
        queue.pop_front();
        if (f == to) break;
        for (EdgeId e : g.faces[f].edges()) {
            if (td.wall(e)) continue;
            FaceId o = g.edges[e].other(f);
            if (parent.emplace(o, f).second) queue.push_back(o);
        }
    }
    if (!parent.count(to)) throw InternalInvariantError("no tunnel path between faces");
    std::vector<FaceId> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

PathFamily initial_family(const PlaneGraph& g, const TunnelDecomposition& td) {
    if (!g.full()) throw ValidationError("NotFullArrangement: the construction needs all n(n-1)/2 crossings");
    if (td.width != 2 || td.offset != 1) throw ValidationError("initial family needs the width-2, offset-1 tunnels");
    PathFamily family;
    const int n = g.n();
    for (int i = 1; i <= n / 2; ++i) {
        const bool odd = i % 2 == 1;
        const FaceId from = g.left_unbounded[odd ? 2 * i - 1 : 2 * i];
        const FaceId to = g.right_unbounded[odd ? 2 * i : 2 * i - 1];
        family.paths.push_back(tunnel_path(g, td, from, to));
    }
    return family;
}

namespace {

struct UnboundedSlot {
    Side side;
    int level;
};

std::vector<UnboundedSlot> slots_of(const PlaneGraph& g, FaceId f) {
    std::vector<UnboundedSlot> out;
    for (int i = 0; i <= g.n(); ++i) {
        if (g.left_unbounded[i] == f) out.push_back({Side::Left, i});
        if (g.right_unbounded[i] == f) out.push_back({Side::Right, i});
    }
    return out;
}

[[noreturn]] void ungluable(const std::string& why) { throw ValidationError("UngluableSubset: " + why); }

// Walks the unbounded faces on one side from the end of `acc` to the start of
// `next`. Unbounded endpoint faces that the walk runs into are bypassed.
void connect(const PlaneGraph& g, std::vector<FaceId>& acc, std::vector<FaceId> next) {
    const FaceId x = acc.back();
    const FaceId y = next.front();
    if (g.adjacent(x, y)) {
        acc.insert(acc.end(), next.begin(), next.end());
        return;
    }
    std::optional<UnboundedSlot> from, to;
    for (auto a : slots_of(g, x))
        for (auto b : slots_of(g, y))
            if (a.side == b.side && a.level != b.level && !from) {
                from = a;
                to = b;
            }
    if (!from) ungluable("faces " + std::to_string(x) + " and " + std::to_string(y) + " share no unbounded side");

    const auto& ring = from->side == Side::Left ? g.left_unbounded : g.right_unbounded;
    const int step = to->level > from->level ? 1 : -1;
    for (int level = from->level + step;; level += step) {
        const FaceId c = ring[level];
        auto in_next = std::find(next.begin(), next.end(), c);
        if (in_next != next.end()) {
            for (auto it = next.begin(); it != in_next; ++it)
                if (g.faces[*it].bounded()) ungluable("connector would skip a bounded face");
            acc.insert(acc.end(), in_next, next.end());
            return;
        }
        auto in_acc = std::find(acc.begin(), acc.end(), c);
        if (in_acc != acc.end()) {
            while (acc.back() != c) {
                if (g.faces[acc.back()].bounded()) ungluable("connector would drop a bounded face");
                acc.pop_back();
            }
            continue;
        }
        acc.push_back(c);
        if (level == to->level) ungluable("connector overshoots");
    }
}

}  // namespace

DualPath glue(const PlaneGraph& g, const PathFamily& family, const std::vector<int>& subset) {
    std::vector<int> chosen = subset;
    if (chosen.empty())
        for (int i = 1; i <= static_cast<int>(family.paths.size()); ++i) chosen.push_back(i);
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    for (int i : chosen)
        if (i < 1 || i > static_cast<int>(family.paths.size()))
            throw ValidationError("path index " + std::to_string(i) + " outside the family");

    std::vector<FaceId> acc;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        auto p = family.paths[chosen[k] - 1];
        if (k % 2 == 1) std::reverse(p.begin(), p.end());
        if (acc.empty())
            acc = std::move(p);
        else
            connect(g, acc, std::move(p));
    }
    std::vector<FaceId> sorted(acc);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ungluable("glued path repeats a face");
    return with_certificates(g, std::move(acc));
}

int ChargeLedger::charge(FaceId f) const {
    return static_cast<int>(std::count_if(units.begin(), units.end(), [f](const ChargeUnit& u) { return u.holder == f; }));
}

std::vector<int> ChargeLedger::charges(std::size_t face_count) const {
    std::vector<int> out(face_count, 0);
    for (const auto& u : units) ++out[u.holder];
    return out;
}

namespace {

const char* via_name(Via v) {
    switch (v) {
        case Via::Initial: return "initial";
        case Via::Edge: return "edge";
        case Via::Vertex: return "vertex";
        case Via::Terminal: return "terminal";
        case Via::Redistribution: return "redistribute";
        case Via::Deletion: return "delete";
    }
    return "?";
}

}  // namespace

std::string ChargeLedger::trace() const {
    std::ostringstream os;
    for (const auto& e : events) {
        os << via_name(e.via) << ' ' << e.source;
        if (e.sink != kNone) os << " -> " << e.sink;
        if (e.through != kNone) os << " via " << e.through;
        os << " x" << e.amount;
        if (!e.note.empty()) os << " (" << e.note << ')';
        os << '\n';
    }
    return os.str();
}

ChargeLedger initial_charge(const PlaneGraph& g, const PathFamily& family) {
    ChargeLedger ledger;
    auto status = classify_faces(g, family);
    for (FaceId f = 0; f < static_cast<FaceId>(status.size()); ++f) {
        if (status[f] != FaceStatus::NotTraversed) continue;
        ledger.units.push_back({f, f, Via::Initial});
        ledger.units.push_back({f, f, Via::Initial});
        ledger.events.push_back({Via::Initial, f, f, kNone, 2, {}});
    }
    return ledger;
}

HeadRuleTargets head_rule_targets(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f) {
    HeadRuleTargets t;
    t.edge = td.leftmost_wall_edge[f];
    if (t.edge == kNone) throw InternalInvariantError("face " + std::to_string(f) + " has no wall edge");
    t.edge_target = g.edges[t.edge].other(f);
    t.vertex = g.edges[t.edge].right;
    if (t.vertex == kNone)
        throw InternalInvariantError("leftmost wall edge of face " + std::to_string(f) + " has no right vertex");
    t.vertex_target = g.vertices[t.vertex].opposite(f);
    if (t.vertex_target == kNone) throw InternalInvariantError("face is not incident to its own edge's vertex");
    return t;
}

bool claim_length_check(const PlaneGraph& g, const DualPath& p) {
    if (p.empty()) return false;
    const int n = g.n();
    auto check = [&](FaceId a, FaceId b) {
        std::optional<int> i, j;
        for (auto s : slots_of(g, a))
            if (s.side == Side::Left) i = s.level;
        for (auto s : slots_of(g, b))
            if (s.side == Side::Right) j = s.level;
        if (!i || !j) return std::optional<bool>{};
        const long long len = static_cast<long long>(p.size());
        if (2 * *i <= n && 2 * *j <= n) return std::optional<bool>{len >= *i + *j + 1};
        if (2 * *i >= n && 2 * *j >= n) return std::optional<bool>{len >= 2LL * n - *i - *j + 1};
        return std::optional<bool>{true};
    };
    auto forward = check(p.faces.front(), p.faces.back());
    if (forward) return *forward;
    auto backward = check(p.faces.back(), p.faces.front());
    if (backward) return *backward;
    throw ValidationError("claim check needs a path from a left to a right unbounded face");
}

int upper_bound_bipartite(const PlaneGraph& g) {
    int even = 0;
    int odd = 0;
    for (const auto& f : g.faces) (f.level % 2 == 0 ? even : odd)++;
    return 2 * std::min(even, odd) + 1;
}

long long guaranteed_length(int n) {
    const long long num = static_cast<long long>(n) * n - 7LL * n + 2;
    if (num <= 0) return 0;
    return (num + 2) / 3;
}

}  // namespace dualpath
