#include "dualpath/error.hpp"
#include "dualpath/longpath.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace dualpath {

namespace {

struct Location {
    int path = -1;
    int pos = -1;
};

std::vector<Location> locate(const PlaneGraph& g, const PathFamily& family) {
    std::vector<Location> loc(g.faces.size());
    for (int i = 0; i < static_cast<int>(family.paths.size()); ++i)
        for (int k = 0; k < static_cast<int>(family.paths[i].size()); ++k) loc[family.paths[i][k]] = {i, k};
    return loc;
}

std::string trace_of(const RerouteState& s) {
    std::ostringstream os;
    for (const auto& line : s.log) os << line << '\n';
    os << s.ledger.trace();
    return os.str();
}

void record(RerouteState& s, const StepOptions& opt, std::string name, bool passed, std::string detail = {}) {
    s.audits.push_back({name, passed, detail});
    if (opt.audit && !passed) throw AuditFailure("audit " + name + " failed: " + detail, trace_of(s));
}

void delete_charge(RerouteState& s, FaceId source, const char* why) {
    auto& units = s.ledger.units;
    int removed = 0;
    for (auto it = units.begin(); it != units.end();) {
        if (it->source == source) {
            s.ledger.events.push_back({Via::Deletion, source, kNone, it->holder, 1, why});
            it = units.erase(it);
            ++removed;
        } else {
            ++it;
        }
    }
    (void)removed;
}

void move_unit(RerouteState& s, FaceId source, FaceId from, FaceId to, Via via, int through, const char* note) {
    for (auto& u : s.ledger.units) {
        if (u.source == source && u.holder == from) {
            u.holder = to;
            u.via = via;
            s.ledger.events.push_back({via, from, to, through, 1, note});
            return;
        }
    }
    throw InternalInvariantError("no unit of face " + std::to_string(source) + " held by face " + std::to_string(from));
}

std::string face_list(const std::vector<FaceId>& faces) {
    std::string s;
    for (FaceId f : faces) s += (s.empty() ? "" : ",") + std::to_string(f);
    return s;
}

// Valid rerouting: still glueable and no bounded traversed face lost.
void audit_rerouting(RerouteState& s, const StepOptions& opt, const PlaneGraph& g, const PathFamily& before,
                     const char* label) {
    std::string why;
    record(s, opt, std::string(label) + ".glueable", is_glueable(g, s.family, &why), why);
    auto old_status = classify_faces(g, before);
    auto new_status = classify_faces(g, s.family);
    std::string lost;
    for (FaceId f = 0; f < static_cast<FaceId>(old_status.size()); ++f)
        if (old_status[f] == FaceStatus::Traversed && new_status[f] != FaceStatus::Traversed)
            lost += std::to_string(f) + " ";
    record(s, opt, std::string(label) + ".traversed_monotone", lost.empty(), lost);
}

// Wall order of a face: leftmost wall edge, then rightmost.
std::tuple<int, int, int> order_key(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f) {
    auto we = wall_edges(g, td, f);
    if (we.empty()) throw InternalInvariantError("face " + std::to_string(f) + " has no wall edge");
    return {g.edges[we.front()].level, g.edges[we.front()].position, g.edges[we.back()].position};
}

// Inserts b1, b2 between the consecutive path faces f_enter and f_exit.
void insert_pair(RerouteState& s, const PlaneGraph& g, const StepOptions& opt, FaceId f_enter, FaceId b1, FaceId b2,
                 FaceId f_exit, const char* label) {
    auto loc = locate(g, s.family);
    const Location at = loc[f_enter];
    const Location ex = loc[f_exit];
    bool ok = at.path >= 0 && at.path == ex.path && std::abs(at.pos - ex.pos) == 1;
    record(s, opt, std::string(label) + ".consecutive", ok,
           "f_enter=" + std::to_string(f_enter) + " f_exit=" + std::to_string(f_exit));
    if (!ok) throw InternalInvariantError("rerouting endpoints are not consecutive");
    if (!g.adjacent(f_enter, b1) || !g.adjacent(b1, b2) || !g.adjacent(b2, f_exit))
        throw InternalInvariantError("rerouting detour is not a dual path");
    if (loc[b1].path >= 0 || loc[b2].path >= 0) throw InternalInvariantError("rerouting reuses a traversed face");

    auto& path = s.family.paths[at.path];
    if (at.pos < ex.pos) {
        path.insert(path.begin() + ex.pos, {b1, b2});
        s.replaced[{f_enter, f_exit}] = b1;
    } else {
        path.insert(path.begin() + at.pos, {b2, b1});
        s.replaced[{f_exit, f_enter}] = b2;
    }
    s.log.push_back(std::string(label) + ": P" + std::to_string(at.path + 1) + " " + std::to_string(f_enter) + ",[" +
                    std::to_string(b1) + "," + std::to_string(b2) + "]," + std::to_string(f_exit));
    delete_charge(s, b1, "traversed");
    delete_charge(s, b2, "traversed");
}

// Rightmost traversed wall neighbour of `b`, which must also be its penultimate one.
FaceId enter_face(const PlaneGraph& g, const TunnelDecomposition& td, const RerouteState& s, FaceId b, FaceId next,
                  bool require) {
    auto nbrs = wall_neighbors(g, td, b);
    if (nbrs.size() < 2 || nbrs.back() != next) {
        if (require) throw InternalInvariantError("face " + std::to_string(b) + " has no penultimate wall neighbour");
        return kNone;
    }
    const FaceId pen = nbrs[nbrs.size() - 2];
    auto loc = locate(g, s.family);
    if (loc[pen].path < 0) {
        if (require)
            throw InternalInvariantError("penultimate wall neighbour of face " + std::to_string(b) + " is not traversed");
        return kNone;
    }
    return pen;
}

void step1a(RerouteState& s, const PlaneGraph& g, const TunnelDecomposition& td, const StepOptions& opt,
            const std::vector<FaceId>& q, std::size_t start) {
    for (std::size_t k = start; k + 1 < q.size(); k += 2) {
        const FaceId b1 = q[k];
        const FaceId b2 = q[k + 1];
        const FaceId f_enter = enter_face(g, td, s, b1, b2, true);
        const FaceId f_exit = td.tunnel_neighbor[b2];
        if (f_exit == kNone) throw InternalInvariantError("bad face " + std::to_string(b2) + " has no tunnel neighbour");
        insert_pair(s, g, opt, f_enter, b1, b2, f_exit, "step1a");
    }
}

}  // namespace

RerouteState step1(const PlaneGraph& g, const TunnelDecomposition& td, const PathFamily& family,
                   const ChargeLedger& ledger, const StepOptions& opt) {
    if (family.phase != Phase::Initial) throw ValidationError("step1 expects the initial family");
    RerouteState s;
    s.family = family;
    s.ledger = ledger;
    const auto face_count = static_cast<FaceId>(g.faces.size());

    // Maximal paths of G[N_All].
    std::vector<std::uint8_t> in_n(face_count, 1);
    for (const auto& p : family.paths)
        for (FaceId f : p) in_n[f] = 0;
    std::vector<std::vector<FaceId>> nbr(face_count);
    bool wall_only = true;
    for (FaceId f = 0; f < face_count; ++f) {
        if (!in_n[f]) continue;
        for (EdgeId e : g.faces[f].edges()) {
            FaceId o = g.edges[e].other(f);
            if (!in_n[o]) continue;
            if (!td.wall(e)) wall_only = false;
            if (std::find(nbr[f].begin(), nbr[f].end(), o) == nbr[f].end()) nbr[f].push_back(o);
        }
    }
    record(s, opt, "obs.bad_faces_in_tunnel_nonadjacent", wall_only);

    std::vector<int> component(face_count, -1);
    std::vector<std::vector<FaceId>> paths;
    bool path_shaped = true;
    for (FaceId f = 0; f < face_count; ++f) {
        if (!in_n[f] || component[f] != -1) continue;
        std::vector<FaceId> members{f};
        component[f] = static_cast<int>(paths.size());
        std::size_t links = 0;
        for (std::size_t k = 0; k < members.size(); ++k) {
            links += nbr[members[k]].size();
            if (nbr[members[k]].size() > 2) path_shaped = false;
            for (FaceId o : nbr[members[k]])
                if (component[o] == -1) {
                    component[o] = component[f];
                    members.push_back(o);
                }
        }
        if (links / 2 + 1 != members.size()) path_shaped = false;
        if (!path_shaped) break;
        // Walk from an endpoint; orient by wall order of the two ends.
        FaceId start = members.front();
        for (FaceId m : members)
            if (nbr[m].size() <= 1) start = m;
        std::vector<FaceId> walk{start};
        while (walk.size() < members.size()) {
            const FaceId cur = walk.back();
            const FaceId prev = walk.size() > 1 ? walk[walk.size() - 2] : kNone;
            for (FaceId o : nbr[cur])
                if (o != prev) {
                    walk.push_back(o);
                    break;
                }
        }
        if (order_key(g, td, walk.back()) < order_key(g, td, walk.front())) std::reverse(walk.begin(), walk.end());
        members = std::move(walk);
        paths.push_back(std::move(members));
    }
    record(s, opt, "obs.not_traversed_graph_is_paths", path_shaped);
    if (!path_shaped) throw InternalInvariantError("G[N_All] is not a union of paths");
    std::sort(paths.begin(), paths.end(),
              [&](const auto& a, const auto& b) { return order_key(g, td, a.front()) < order_key(g, td, b.front()); });

    std::vector<FaceId> rightmost;
    std::vector<std::pair<FaceId, FaceId>> terminal;  // (source, target)
    auto charged = [&](FaceId f) {
        return f != kNone && g.faces[f].bounded() && locate(g, s.family)[f].path < 0;
    };
    for (const auto& q : paths) {
        rightmost.push_back(q.back());
        if (q.size() < 2) continue;
        if (g.faces[q[0]].degree() >= 3) {
            step1a(s, g, td, opt, q, 0);
        } else if (q.size() >= 5) {
            std::size_t jmin = 0;
            FaceId f_enter = kNone;
            for (std::size_t j = 1; j <= 3 && j + 1 < q.size(); ++j) {
                f_enter = enter_face(g, td, s, q[j], q[j + 1], false);
                if (f_enter != kNone && f_enter != q[j - 1]) {
                    jmin = j;
                    break;
                }
            }
            if (jmin == 0) throw InternalInvariantError("no traversed wall neighbour among the first four bad faces");
            const FaceId f_exit = td.tunnel_neighbor[q[jmin + 1]];
            if (f_exit == kNone) throw InternalInvariantError("bad face without tunnel neighbour");
            insert_pair(s, g, opt, f_enter, q[jmin], q[jmin + 1], f_exit, "step1b");
            if (jmin == 3 && charged(q[2])) terminal.emplace_back(q[2], q[0]);
            if (q.size() >= jmin + 4) step1a(s, g, td, opt, q, jmin + 2);
        } else {
            if (q.size() >= 3 && charged(q[2])) terminal.emplace_back(q[2], q[0]);
            if (q.size() >= 4 && charged(q[3])) terminal.emplace_back(q[3], q[1]);
        }
    }

    // Discharge every face still holding its own charge.
    std::set<FaceId> senders;
    for (const auto& u : s.ledger.units)
        if (u.holder == u.source) senders.insert(u.source);
    std::set<FaceId> head_senders;
    for (FaceId f : senders) {
        auto t = std::find_if(terminal.begin(), terminal.end(), [f](const auto& p) { return p.first == f; });
        if (t != terminal.end()) {
            move_unit(s, f, f, t->second, Via::Terminal, kNone, "step1 terminal");
            move_unit(s, f, f, t->second, Via::Terminal, kNone, "step1 terminal");
            continue;
        }
        auto hr = head_rule_targets(g, td, f);
        move_unit(s, f, f, hr.edge_target, Via::Edge, hr.edge, "headrule");
        move_unit(s, f, f, hr.vertex_target, Via::Vertex, hr.vertex, "headrule");
        head_senders.insert(f);
    }
    s.family.phase = Phase::AfterStep1;

    if (opt.audit) {
        audit_rerouting(s, opt, g, family, "step1");
        std::string bad;
        for (const auto& u : s.ledger.units) {
            if (u.via != Via::Edge && u.via != Via::Vertex) continue;
            const int dt = std::abs(td.face_tunnel[u.holder] - td.face_tunnel[u.source]);
            if (dt != 1 || (u.via == Via::Vertex && !td.good(u.holder)))
                bad += std::to_string(u.source) + "->" + std::to_string(u.holder) + " ";
        }
        record(s, opt, "obs.charge_to_adjacent_tunnel", bad.empty(), bad);

        std::string not_right;
        for (FaceId f : head_senders)
            if (std::find(rightmost.begin(), rightmost.end(), f) == rightmost.end()) not_right += std::to_string(f) + " ";
        record(s, opt, "obs.right_send", not_right.empty(), not_right);

        std::vector<int> by_vertex(face_count, 0), by_edge(face_count, 0);
        for (const auto& u : s.ledger.units) {
            if (u.via == Via::Vertex) ++by_vertex[u.holder];
            if (u.via == Via::Edge) ++by_edge[u.holder];
        }
        std::string twice;
        for (FaceId f = 0; f < face_count; ++f)
            if (by_vertex[f] > 1 || by_edge[f] > 1) twice += std::to_string(f) + " ";
        record(s, opt, "obs.two_charge", twice.empty(), twice);

        auto status = classify_faces(g, s.family);
        auto ch = s.ledger.charges(face_count);
        std::string p1, p2;
        int n_count = 0;
        for (FaceId f = 0; f < face_count; ++f) {
            if (status[f] == FaceStatus::NotTraversed) {
                ++n_count;
                if (ch[f] != 0) p1 += std::to_string(f) + " ";
            }
            if (ch[f] > 2) p2 += std::to_string(f) + " ";
        }
        record(s, opt, "P1", p1.empty(), p1);
        record(s, opt, "P2", p2.empty(), p2);
        record(s, opt, "P3", s.ledger.total() == 2 * n_count,
               std::to_string(s.ledger.total()) + " vs " + std::to_string(2 * n_count));
    }
    return s;
}

Step2Result step2(const PlaneGraph& g, const TunnelDecomposition& td, const PathFamily& initial,
                  RerouteState s, const StepOptions& opt) {
    if (s.family.phase != Phase::AfterStep1) throw ValidationError("step2 expects the family after step 1");
    const PathFamily before = s.family;
    const auto face_count = static_cast<FaceId>(g.faces.size());

    std::vector<FaceId> candidates;
    {
        auto status = classify_faces(g, s.family);
        auto ch = s.ledger.charges(face_count);
        for (FaceId f = 0; f < face_count; ++f)
            if (status[f] == FaceStatus::Traversed && ch[f] >= 2) candidates.push_back(f);
        // Left to right along the original tunnel paths.
        auto loc = locate(g, initial);
        std::stable_sort(candidates.begin(), candidates.end(), [&](FaceId a, FaceId b) {
            return std::pair(loc[a].path, loc[a].pos) < std::pair(loc[b].path, loc[b].pos);
        });
    }
    std::set<FaceId> inserted_be;

    for (FaceId f : candidates) {
        const ChargeUnit* by_edge = nullptr;
        const ChargeUnit* by_vertex = nullptr;
        int held = 0;
        for (const auto& u : s.ledger.units) {
            if (u.holder != f) continue;
            ++held;
            if (u.via == Via::Edge) by_edge = &u;
            if (u.via == Via::Vertex) by_vertex = &u;
        }
        if (held < 2) continue;
        if (held > 2 || !by_edge || !by_vertex)
            throw InternalInvariantError("face " + std::to_string(f) + " holds charge not split as one edge and one vertex unit");
        const FaceId b_e = by_edge->source;
        const FaceId b_v = by_vertex->source;

        const int tunnel = td.face_tunnel[f];
        if (tunnel < 1 || tunnel > static_cast<int>(initial.paths.size()))
            throw InternalInvariantError("charged face outside the path tunnels");
        const auto& orig = initial.paths[tunnel - 1];
        auto it = std::find(orig.begin(), orig.end(), f);
        if (it == orig.end()) throw InternalInvariantError("face " + std::to_string(f) + " missing from its initial path");
        std::vector<FaceId> good_after;
        for (++it; it != orig.end() && good_after.size() < 2; ++it)
            if (td.good(*it)) good_after.push_back(*it);
        if (good_after.size() == 1 && good_after[0] != orig.back()) good_after.push_back(orig.back());
        if (good_after.size() < 2) throw InternalInvariantError("fewer than two good faces after face " + std::to_string(f));
        const FaceId f1 = good_after[0];
        const FaceId f2 = good_after[1];

        auto loc = locate(g, s.family);
        const Location at = loc[f];
        auto& path = s.family.paths[at.path];
        if (at.pos < 1 || at.pos + 2 >= static_cast<int>(path.size()))
            throw InternalInvariantError("face " + std::to_string(f) + " lacks neighbours in its path");
        const FaceId pr = path[at.pos - 1];
        const FaceId s1 = path[at.pos + 1];
        const FaceId s2 = path[at.pos + 2];
        record(s, opt, "step2.successor_is_next_good", s1 == f1,
               "face " + std::to_string(f) + ": s1=" + std::to_string(s1) + " f1=" + std::to_string(f1));

        if (inserted_be.count(pr) && !g.adjacent(pr, b_v)) {
            // (pr_orig, f) was consumed by an earlier 2a detour ending in pr.
            move_unit(s, b_v, f, pr, Via::Redistribution, kNone, "step2 predecessor");
            s.log.push_back("step2p: face " + std::to_string(f) + " -> " + std::to_string(pr));
        } else if (s2 == f2) {
            const std::vector<FaceId> detour{pr, b_v, f1, f, b_e, f2};
            bool adjacent = loc[b_v].path < 0 && loc[b_e].path < 0;
            for (std::size_t k = 0; adjacent && k + 1 < detour.size(); ++k) adjacent = g.adjacent(detour[k], detour[k + 1]);
            record(s, opt, "step2a.detour_valid", adjacent, face_list(detour));
            if (!adjacent) throw InternalInvariantError("step 2a detour is not a dual path");
            path.erase(path.begin() + at.pos - 1, path.begin() + at.pos + 3);
            path.insert(path.begin() + at.pos - 1, detour.begin(), detour.end());
            s.log.push_back("step2a: P" + std::to_string(at.path + 1) + " " + face_list(detour));
            delete_charge(s, b_v, "traversed");
            delete_charge(s, b_e, "traversed");
            inserted_be.insert(b_e);
        } else {
            auto rep = s.replaced.find({f1, f2});
            const bool found = rep != s.replaced.end() && rep->second == s2;
            record(s, opt, "step2b.replaced_in_step1", found,
                   "face " + std::to_string(f) + ": (" + std::to_string(f1) + "," + std::to_string(f2) + ")");
            if (!found) throw InternalInvariantError("step 2 found neither case");
            move_unit(s, b_v, f, rep->second, Via::Redistribution, kNone, "step2b");
            s.log.push_back("step2b: face " + std::to_string(f) + " -> " + std::to_string(rep->second));
        }
    }
    s.family.phase = Phase::AfterStep2;

    Step2Result out;
    if (opt.audit) {
        audit_rerouting(s, opt, g, before, "step2");
        auto status = classify_faces(g, s.family);
        auto ch = s.ledger.charges(face_count);
        std::string q1, q2, q3;
        int n_count = 0;
        for (FaceId f = 0; f < face_count; ++f) {
            switch (status[f]) {
                case FaceStatus::NotTraversed:
                    ++n_count;
                    if (ch[f] != 0) q1 += std::to_string(f) + " ";
                    break;
                case FaceStatus::Traversed:
                    if (ch[f] > 1) q2 += std::to_string(f) + " ";
                    break;
                case FaceStatus::Unbounded:
                    if (ch[f] > 2) q3 += std::to_string(f) + " ";
                    break;
            }
        }
        record(s, opt, "Q1", q1.empty(), q1);
        record(s, opt, "Q2", q2.empty(), q2);
        record(s, opt, "Q3", q3.empty(), q3);
        record(s, opt, "Q4", s.ledger.total() == 2 * n_count,
               std::to_string(s.ledger.total()) + " vs " + std::to_string(2 * n_count));
    }
    out.final_path = glue(g, s.family);
    out.state = std::move(s);
    return out;
}

bool LongPathResult::all_passed() const {
    return std::all_of(audits.begin(), audits.end(), [](const AuditEntry& a) { return a.passed; });
}

std::string LongPathResult::report() const {
    std::ostringstream os;
    os << "length " << final_path.size() << '\n';
    os << "traversed " << traversed << " not_traversed " << not_traversed << " unbounded " << unbounded << '\n';
    for (const auto& a : audits) {
        os << (a.passed ? "PASS " : "FAIL ") << a.name;
        if (!a.passed && !a.detail.empty()) os << " : " << a.detail;
        os << '\n';
    }
    return os.str();
}

LongPathResult run_longpath(const PlaneGraph& g, const StepOptions& opt) {
    LongPathResult r;
    r.tunnels = longpath_tunnels(g);
    const auto& td = r.tunnels;
    r.initial = initial_family(g, td);
    const int n = g.n();
    const auto face_count = static_cast<FaceId>(g.faces.size());

    RerouteState pre;
    pre.family = r.initial;
    {
        std::string why;
        record(pre, opt, "initial.glueable", is_glueable(g, r.initial, &why), why);
        std::string claim;
        long long total = 0;
        for (std::size_t i = 0; i < r.initial.paths.size(); ++i) {
            total += static_cast<long long>(r.initial.paths[i].size());
            if (!claim_length_check(g, with_certificates(g, r.initial.paths[i]))) claim += std::to_string(i + 1) + " ";
        }
        record(pre, opt, "initial.claim_endpoint_length", claim.empty(), claim);
        record(pre, opt, "initial.quarter_bound", 4 * total >= 1LL * n * n - 4LL * n,
               std::to_string(total) + " faces");

        auto status = classify_faces(g, r.initial);
        std::vector<std::uint8_t> endpoint(face_count, 0);
        for (const auto& p : r.initial.paths) endpoint[p.front()] = endpoint[p.back()] = 1;
        std::vector<std::uint8_t> on_path(face_count, 0);
        for (const auto& p : r.initial.paths)
            for (FaceId f : p) on_path[f] = 1;
        std::string untraversed_good, inner_bad;
        for (FaceId f = 0; f < face_count; ++f) {
            if (td.good(f) && !on_path[f]) untraversed_good += std::to_string(f) + " ";
            if (!td.good(f) && on_path[f] && !endpoint[f]) inner_bad += std::to_string(f) + " ";
        }
        record(pre, opt, "obs.good_faces_traversed", untraversed_good.empty(), untraversed_good);
        record(pre, opt, "obs.traversed_bad_is_endpoint", inner_bad.empty(), inner_bad);
        (void)status;
    }

    ChargeLedger ledger = initial_charge(g, r.initial);
    {
        std::string wrong;
        for (const auto& u : ledger.units)
            if (!g.faces[u.source].bounded() || td.good(u.source)) wrong += std::to_string(u.source) + " ";
        record(pre, opt, "initial.charged_faces_bad_bounded", wrong.empty(), wrong);
    }

    RerouteState s1 = step1(g, td, r.initial, ledger, opt);
    r.after_step1 = s1.family;
    auto audits = pre.audits;
    audits.insert(audits.end(), s1.audits.begin(), s1.audits.end());
    s1.audits.clear();
    Step2Result s2 = step2(g, td, r.initial, std::move(s1), opt);
    audits.insert(audits.end(), s2.state.audits.begin(), s2.state.audits.end());

    r.after_step2 = s2.state.family;
    r.ledger = s2.state.ledger;
    r.log = s2.state.log;
    r.final_path = std::move(s2.final_path);

    auto status = classify_faces(g, r.after_step2);
    for (auto st : status) {
        if (st == FaceStatus::Traversed) ++r.traversed;
        if (st == FaceStatus::NotTraversed) ++r.not_traversed;
        if (st == FaceStatus::Unbounded) ++r.unbounded;
    }
    RerouteState fin;
    fin.ledger = r.ledger;
    fin.log = r.log;
    auto report = verify_path(g, r.final_path);
    record(fin, opt, "final.path_valid", report.ok(), report.to_string());
    const long long f_count = face_count;
    record(fin, opt, "final.two_thirds", 3LL * r.traversed >= 2 * f_count - 4LL * r.unbounded,
           std::to_string(r.traversed) + " traversed of " + std::to_string(f_count));
    record(fin, opt, "final.length_bound", static_cast<long long>(r.final_path.size()) >= guaranteed_length(n),
           std::to_string(r.final_path.size()) + " < " + std::to_string(guaranteed_length(n)));
    audits.insert(audits.end(), fin.audits.begin(), fin.audits.end());
    r.audits = std::move(audits);
    return r;
}

}  // namespace dualpath
