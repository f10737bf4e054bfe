#include "dualpath/bicolored.hpp"

#include "dualpath/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>
#include <thread>

namespace dualpath {

void validate_coloring(const PlaneGraph& g, const ColorVector& c) {
    if (static_cast<int>(c.size()) != g.n())
        throw ValidationError("coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.n()) +
                              " pseudolines");
    const bool red = std::find(c.begin(), c.end(), Color::Red) != c.end();
    const bool blue = std::find(c.begin(), c.end(), Color::Blue) != c.end();
    if (!red || !blue) throw ValidationError("MonochromaticColoring: both colors must occur");
}

DirectedDual build_directed_dual(const PlaneGraph& g, const ColorVector& c) {
    validate_coloring(g, c);
    DirectedDual dd;
    const std::size_t nf = g.faces.size();
    dd.out.assign(nf, {});
    dd.in.assign(nf, {});
    dd.black.resize(nf);
    for (std::size_t f = 0; f < nf; ++f) dd.black[f] = g.faces[f].level % 2 == 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        const FaceId black = dd.black[ed.below] ? ed.below : ed.above;
        const FaceId white = ed.other(black);
        DirectedDual::Arc a;
        a.edge = e;
        if (c[ed.line] == Color::Blue) {
            a.from = white;
            a.to = black;
        } else {
            a.from = black;
            a.to = white;
        }
        dd.arcs.push_back(a);
    }
    for (int a = 0; a < static_cast<int>(dd.arcs.size()); ++a) {
        dd.out[dd.arcs[a].from].push_back(a);
        dd.in[dd.arcs[a].to].push_back(a);
    }
    for (auto& v : dd.out)
        std::sort(v.begin(), v.end(), [&](int x, int y) { return dd.arcs[x].to < dd.arcs[y].to; });
    for (auto& v : dd.in)
        std::sort(v.begin(), v.end(), [&](int x, int y) { return dd.arcs[x].from < dd.arcs[y].from; });
    return dd;
}

std::optional<std::vector<FaceId>> directed_path(const DirectedDual& dd, const std::vector<FaceId>& sources,
                                                 const std::vector<std::uint8_t>& targets,
                                                 const std::vector<std::uint8_t>& allowed) {
    const std::size_t nf = dd.face_count();
    auto ok = [&](FaceId f) { return allowed.empty() || allowed[f]; };
    std::vector<FaceId> parent(nf, kNone);
    std::vector<std::uint8_t> seen(nf, 0);
    std::deque<FaceId> queue;
    std::vector<FaceId> src(sources);
    std::sort(src.begin(), src.end());
    for (FaceId s : src)
        if (ok(s) && !seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        if (targets[f]) {
            std::vector<FaceId> path{f};
            while (parent[path.back()] != kNone) path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int a : dd.out[f]) {
            const FaceId t = dd.arcs[a].to;
            if (seen[t] || !ok(t)) continue;
            seen[t] = 1;
            parent[t] = f;
            queue.push_back(t);
        }
    }
    return std::nullopt;
}

DualPath to_dual_path(const DirectedDual& dd, const PlaneGraph& g, const std::vector<FaceId>& faces) {
    (void)g;
    DualPath p;
    p.faces = faces;
    for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
        EdgeId edge = kNone;
        for (int a : dd.out[faces[k]])
            if (dd.arcs[a].to == faces[k + 1]) edge = dd.arcs[a].edge;
        if (edge == kNone)
            throw InternalInvariantError("no arc from face " + std::to_string(faces[k]) + " to face " +
                                         std::to_string(faces[k + 1]));
        p.certificates.push_back(edge);
    }
    return p;
}

ReachResult reach(const DirectedDual& dd, const PlaneGraph& g, const ColorVector& c, FaceId z, bool check_boundary) {
    if (!g.has_face(z)) throw ValidationError("unknown face " + std::to_string(z));
    std::vector<std::uint8_t> in(dd.face_count(), 0);
    std::vector<FaceId> stack{z};
    in[z] = 1;
    while (!stack.empty()) {
        const FaceId f = stack.back();
        stack.pop_back();
        for (int a : dd.out[f]) {
            const FaceId t = dd.arcs[a].to;
            if (!in[t]) {
                in[t] = 1;
                stack.push_back(t);
            }
        }
    }
    ReachResult r;
    for (FaceId f = 0; f < static_cast<FaceId>(in.size()); ++f)
        if (in[f]) r.faces.push_back(f);
    std::vector<std::uint8_t> on_boundary(g.edges.size(), 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e)
        if (in[g.edges[e].below] != in[g.edges[e].above]) {
            on_boundary[e] = 1;
            r.boundary.push_back(e);
        }
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertices.size()); ++v) {
        bool red = false, blue = false;
        for (EdgeId e : g.vertices[v].edges)
            if (on_boundary[e]) (c[g.edges[e].line] == Color::Red ? red : blue) = true;
        if (red && blue) {
            r.boundary_monochromatic_at_vertices = false;
            r.detail += "vertex " + std::to_string(v) + " has red and blue boundary edges; ";
        }
    }
    if (check_boundary && !r.boundary_monochromatic_at_vertices)
        throw AuditFailure("reach boundary mixes colors at a vertex", r.detail);
    return r;
}

std::vector<std::uint8_t> DepthMap::outer(int w) const {
    std::vector<std::uint8_t> o(depth.size());
    for (std::size_t f = 0; f < depth.size(); ++f) o[f] = depth[f] <= w;
    return o;
}

namespace {

std::vector<int> undirected_distance(const PlaneGraph& g, const std::vector<FaceId>& sources,
                                     const std::vector<std::uint8_t>& allowed = {}) {
    std::vector<int> dist(g.faces.size(), -1);
    std::deque<FaceId> queue;
    for (FaceId s : sources)
        if (dist[s] == -1) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        for (EdgeId e : g.faces[f].edges()) {
            const FaceId o = g.edges[e].other(f);
            if (dist[o] != -1 || (!allowed.empty() && !allowed[o])) continue;
            dist[o] = dist[f] + 1;
            queue.push_back(o);
        }
    }
    return dist;
}

}  // namespace

DepthMap compute_depth(const PlaneGraph& g) {
    std::vector<FaceId> unbounded;
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f)
        if (!g.faces[f].bounded()) unbounded.push_back(f);
    DepthMap m;
    m.depth = undirected_distance(g, unbounded);
    for (int d : m.depth) m.max_depth = std::max(m.max_depth, d);
    return m;
}

int default_width(int n) {
    if (n < 1) throw ValidationError("n must be positive");
    int lg = 0;
    while ((1LL << lg) < n) ++lg;
    return 6 * lg + 3;
}

Thm3Result construct_thm3(const PlaneGraph& g, const ColorVector& c, int w) {
    const int n = g.n();
    if (w < 3) throw ValidationError("width must be at least 3");
    if (w > n) throw ValidationError("unsupported configuration: width " + std::to_string(w) + " leaves a single tunnel");
    const DirectedDual dd = build_directed_dual(g, c);
    const TunnelDecomposition td = decompose_tunnels(g, w, 0);
    const DepthMap depth = compute_depth(g);
    const auto outer = depth.outer(w);
    const auto nf = static_cast<FaceId>(g.faces.size());

    Thm3Result r;
    r.w = w;
    r.last_tunnel = td.last;
    const int l = td.last;

    // Left and right halves of the outer tunnel by nearest side; ties belong to both.
    std::vector<FaceId> left_src, right_src;
    for (int i = 1; i < n; ++i) {
        left_src.push_back(g.left_unbounded[i]);
        right_src.push_back(g.right_unbounded[i]);
    }
    const auto dl = undirected_distance(g, left_src);
    const auto dr = undirected_distance(g, right_src);
    std::vector<std::uint8_t> allow_l(nf), allow_r(nf), start(nf), finish(nf);
    std::vector<FaceId> start_l, start_r;
    for (FaceId f = 0; f < nf; ++f) {
        allow_l[f] = outer[f] && dl[f] <= dr[f];
        allow_r[f] = outer[f] && dr[f] <= dl[f];
        finish[f] = td.face_tunnel[f] == l;
        if (td.face_tunnel[f] == 0) {
            if (allow_l[f]) start_l.push_back(f);
            if (allow_r[f]) start_r.push_back(f);
        }
    }
    r.left_path = directed_path(dd, start_l, finish, allow_l);
    r.right_path = directed_path(dd, start_r, finish, allow_r);
    if (!r.left_path || !r.right_path) {
        r.b_event = true;
        r.log.push_back(std::string("B: no ") + (!r.left_path ? "L" : "R") + " path through the outer tunnel");
        return r;
    }

    // First upward crossing of each wall.
    auto tilde = [&](const std::vector<FaceId>& path) {
        std::vector<FaceId> t(2 * l + 1, kNone);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            const int a = td.face_tunnel[path[k]];
            const int b = td.face_tunnel[path[k + 1]];
            if (b == a + 1 && t[2 * b] == kNone) {
                t[2 * b - 1] = path[k];
                t[2 * b] = path[k + 1];
            }
        }
        for (int k = 1; k <= 2 * l; ++k)
            if (t[k] == kNone) throw InternalInvariantError("outer path misses a wall crossing");
        return t;
    };
    r.l_tilde = tilde(*r.left_path);
    r.r_tilde = tilde(*r.right_path);

    std::vector<FaceId> glued;
    for (int i = 1; i < l; ++i) {
        TunnelPath tp;
        tp.tunnel = i;
        const bool odd = i % 2 == 1;
        const FaceId from = odd ? r.r_tilde[2 * i] : r.l_tilde[2 * i];
        const FaceId to = odd ? r.l_tilde[2 * i + 1] : r.r_tilde[2 * i + 1];
        std::vector<std::uint8_t> in_tunnel(nf), target(nf, 0);
        for (FaceId f = 0; f < nf; ++f) in_tunnel[f] = td.face_tunnel[f] == i;
        target[to] = 1;
        auto p = directed_path(dd, {from}, target, in_tunnel);
        tp.middle = 3 * i >= l && 3 * i <= 2 * l;
        if (tp.middle) ++r.middle_tunnels;
        if (!p) {
            r.a_events.push_back(i);
            r.log.push_back("A_" + std::to_string(i) + ": no tunnel path");
            r.tunnels.push_back(tp);
            continue;
        }
        tp.found = true;
        tp.faces = *p;
        std::vector<FaceId> start_side, end_side;
        for (int lev = i * w; lev <= std::min(n, (i + 1) * w - 1); ++lev) {
            (odd ? start_side : end_side).push_back(g.right_unbounded[lev]);
            (odd ? end_side : start_side).push_back(g.left_unbounded[lev]);
        }
        tp.extension_start = undirected_distance(g, start_side, in_tunnel)[tp.faces.front()];
        tp.extension_end = undirected_distance(g, end_side, in_tunnel)[tp.faces.back()];
        const long long lhs = static_cast<long long>(tp.faces.size()) + 4LL * w;
        tp.bound_holds = lhs >= 2LL * i * (w - 1);
        if (tp.middle && !tp.bound_holds) ++r.middle_bound_failures;
        glued.insert(glued.end(), tp.faces.begin(), tp.faces.end());
        r.tunnels.push_back(tp);
    }
    r.success = r.a_events.empty();
    if (r.success) r.glued = to_dual_path(dd, g, glued);
    return r;
}

ColorVector trial_coloring(int n, std::uint64_t seed, int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    ColorVector c(n);
    while (true) {
        std::uint64_t bits = 0;
        int left = 0;
        for (int i = 0; i < n; ++i) {
            if (left == 0) {
                bits = rng();
                left = 64;
            }
            c[i] = (bits & 1) ? Color::Blue : Color::Red;
            bits >>= 1;
            --left;
        }
        const bool red = std::find(c.begin(), c.end(), Color::Red) != c.end();
        const bool blue = std::find(c.begin(), c.end(), Color::Blue) != c.end();
        if (red && blue) return c;
    }
}

MonteCarloStats monte_carlo(const PlaneGraph& g, int w, int trials, std::uint64_t seed, int threads) {
    if (trials < 1) throw ValidationError("trials must be positive");
    const int n = g.n();
    if (n < 2) throw ValidationError("random colorings need at least two pseudolines");
    if (w < 3) throw ValidationError("width must be at least 3");
    if (w > n) throw ValidationError("unsupported configuration: width " + std::to_string(w) + " leaves a single tunnel");

    MonteCarloStats s;
    s.n = n;
    s.w = w;
    s.trials = trials;
    s.seed = seed;
    s.records.resize(trials);
    auto run = [&](int t) {
        const ColorVector c = trial_coloring(n, seed, t);
        const Thm3Result r = construct_thm3(g, c, w);
        TrialRecord& rec = s.records[t];
        rec.trial = t;
        rec.success = r.success;
        rec.a_events = static_cast<int>(r.a_events.size());
        rec.b_event = r.b_event;
        rec.middle_tunnels = r.middle_tunnels;
        rec.middle_bound_failures = r.middle_bound_failures;
        if (r.success) {
            rec.path_length = r.glued.size();
            rec.path_valid = verify_path(g, r.glued, &c).ok();
        }
    };
    threads = std::max(1, std::min(threads, trials));
    if (threads == 1) {
        for (int t = 0; t < trials; ++t) run(t);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back([&, k] {
                for (int t = k; t < trials; t += threads) run(t);
            });
        for (auto& th : pool) th.join();
    }

    const int l = n / w;
    s.a_counts.assign(l + 1, 0);
    std::vector<std::size_t> lengths;
    for (const auto& rec : s.records) {
        if (rec.success) {
            ++s.successes;
            lengths.push_back(rec.path_length);
        }
        if (rec.b_event) ++s.b_events;
        if (!rec.success) ++s.blocked;
    }
    // Per-tunnel counts need the events themselves; recompute from the trials cheaply.
    for (int t = 0; t < trials; ++t) {
        if (s.records[t].a_events == 0) continue;
        const Thm3Result r = construct_thm3(g, trial_coloring(n, seed, t), w);
        for (int i : r.a_events) ++s.a_counts[i];
    }
    if (!lengths.empty()) {
        std::sort(lengths.begin(), lengths.end());
        double sum = 0;
        for (auto x : lengths) sum += static_cast<double>(x);
        s.mean_length = sum / static_cast<double>(lengths.size());
        auto rank = [&](double q) {
            const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(lengths.size()))) - 1;
            return lengths[std::min(idx, lengths.size() - 1)];
        };
        s.p10 = rank(0.1);
        s.p50 = rank(0.5);
        s.p90 = rank(0.9);
    }
    s.bound_a = std::pow(static_cast<double>(n), 4) * std::pow(2.0, -w + 3);
    s.bound_b = std::pow(static_cast<double>(n), 3) / std::pow(2.0, w - 1) + 2.0 / std::pow(2.0, n / 3.0 - w);
    return s;
}

std::string MonteCarloStats::csv() const {
    std::ostringstream os;
    os << "trial,success,path_length,num_A_events,B_event\n";
    for (const auto& r : records)
        os << r.trial << ',' << (r.success ? 1 : 0) << ',' << r.path_length << ',' << r.a_events << ','
           << (r.b_event ? 1 : 0) << '\n';
    return os.str();
}

std::string MonteCarloStats::summary() const {
    std::ostringstream os;
    os << "n=" << n << " w=" << w << " trials=" << trials << " seed=" << seed << '\n';
    os << "successes=" << successes << " blocked=" << blocked << " b_events=" << b_events << '\n';
    os << "a_events_per_tunnel=";
    for (std::size_t i = 1; i < a_counts.size(); ++i) os << (i > 1 ? "," : "") << a_counts[i];
    os << '\n';
    os << "path_length mean=" << mean_length << " p10=" << p10 << " p50=" << p50 << " p90=" << p90 << '\n';
    os << "bound_A=" << bound_a << (bound_a >= 1 ? " (vacuous)" : "") << " bound_B=" << bound_b
       << (bound_b >= 1 ? " (vacuous)" : "") << '\n';
    return os.str();
}

}  // namespace dualpath
