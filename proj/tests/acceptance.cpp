// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "dualpath/bicolored.hpp"
#include "dualpath/geometry.hpp"
#include "dualpath/longpath.hpp"
#include "dualpath/oracle.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace dualpath;

namespace {

constexpr int kCorpusPerN = 100;
constexpr int kCorpusMaxN = 30;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string artifact;
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

const std::vector<PlaneGraph>& corpus(int n) {
    static std::map<int, std::vector<PlaneGraph>> cache;
    auto& v = cache[n];
    if (v.empty())
        for (int s = 0; s < kCorpusPerN; ++s) v.push_back(build_plane_graph(gen_random_wiring(n, s)));
    return v;
}

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Criterion 1
Outcome counting() {
    Outcome o;
    std::ostringstream art;
    for (int n = 3; n <= 12; ++n)
        for (const auto& g : corpus(n)) {
            const long long c2 = oracle::choose2(n);
            if (static_cast<long long>(g.vertices.size()) != c2) fail(o, "V at n=" + std::to_string(n));
            if (static_cast<long long>(g.edges.size()) != 1LL * n * n) fail(o, "E at n=" + std::to_string(n));
            if (static_cast<long long>(g.faces.size()) != c2 + n + 1) fail(o, "F at n=" + std::to_string(n));
            std::map<int, int> per_level;
            for (const auto& f : g.faces)
                if (!f.bounded()) ++per_level[f.level];
            int unbounded = 0;
            for (auto [lev, k] : per_level) {
                unbounded += k;
                // Levels 0 and n: one face is both l_i and r_i.
                const int expect = lev == 0 || lev == n ? 1 : 2;
                if (k != expect) fail(o, "unbounded faces on level " + std::to_string(lev));
            }
            if (unbounded != 2 * n) fail(o, "|U| at n=" + std::to_string(n));
            if (g.left_unbounded[0] != g.right_unbounded[0] || g.left_unbounded[n] != g.right_unbounded[n])
                fail(o, "endpoint identification");
            for (int i = 1; i < n; ++i)
                if (g.left_unbounded[i] == g.right_unbounded[i]) fail(o, "l_i = r_i for 0 < i < n");
            if (g.unbounded_count() != 2 * n) fail(o, "unbounded_count");
            art << g.faces.size() << ' ';
        }
    o.artifact = art.str();
    if (o.pass) o.detail = "1000 diagrams";
    return o;
}

// Criterion 2
Outcome structure() {
    Outcome o;
    std::ostringstream art;
    long long bad_total = 0;
    for (int n = 3; n <= 12; ++n)
        for (const auto& g : corpus(n)) {
            const auto td = longpath_tunnels(g);
            auto tunnel = [](int level) { return (level + 1) / 2; };
            const auto nf = static_cast<FaceId>(g.faces.size());
            std::vector<char> is_wall(g.edges.size());
            for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e)
                is_wall[e] = tunnel(g.faces[g.edges[e].below].level) != tunnel(g.faces[g.edges[e].above].level);
            // Walls a vertex touches, by edge level.
            std::vector<std::set<int>> vwall(g.vertices.size());
            for (VertexId v = 0; v < static_cast<VertexId>(g.vertices.size()); ++v)
                for (EdgeId e : g.vertices[v].edges)
                    if (is_wall[e]) vwall[v].insert(g.edges[e].level);
            std::vector<char> bad(nf, 0);
            for (FaceId f = 0; f < nf; ++f) {
                auto vs = g.faces[f].vertices();
                if (vs.empty()) continue;
                for (int lev : vwall[vs.front()]) {
                    bool all = true;
                    for (VertexId v : vs) all = all && vwall[v].count(lev);
                    if (all) bad[f] = 1;
                }
                if (bad[f] != td.face_bad[f]) fail(o, "bad face classification differs");
            }
            std::vector<std::vector<FaceId>> tadj(nf), wadj(nf);
            for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
                auto [a, b] = std::pair{g.edges[e].below, g.edges[e].above};
                auto& adj = is_wall[e] ? wadj : tadj;
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::map<int, std::vector<FaceId>> tunnels;
            for (FaceId f = 0; f < nf; ++f) tunnels[tunnel(g.faces[f].level)].push_back(f);
            for (auto& [i, faces] : tunnels)
                if (!oracle::is_caterpillar(faces, tadj)) fail(o, "tunnel " + std::to_string(i) + " not a caterpillar");
            for (FaceId f = 0; f < nf; ++f) {
                if (!bad[f] || !g.faces[f].bounded()) continue;
                ++bad_total;
                if (tadj[f].size() != 1) {
                    fail(o, "bad face " + std::to_string(f) + " has " + std::to_string(tadj[f].size()) + " tunnel neighbours");
                    continue;
                }
                const FaceId t = tadj[f].front();
                if (bad[t] && t != g.top()) fail(o, "tunnel neighbour of a bad face is bad");
                std::set<FaceId> across(wadj[f].begin(), wadj[f].end());
                if (across.size() < 2) fail(o, "bounded bad face nested in face " + std::to_string(*across.begin()));
            }
            // G[N] for the initial family, N = bounded faces left out.
            const auto fam = initial_family(g, td);
            std::vector<char> in_n(nf, 0);
            for (FaceId f = 0; f < nf; ++f) in_n[f] = g.faces[f].bounded();
            for (const auto& p : fam.paths)
                for (FaceId f : p) in_n[f] = 0;
            std::vector<std::vector<FaceId>> nadj(nf);
            std::size_t nodes = 0, links = 0;
            for (FaceId f = 0; f < nf; ++f) {
                if (!in_n[f]) continue;
                ++nodes;
                std::set<FaceId> nb;
                for (FaceId t : wadj[f]) nb.insert(t);
                for (FaceId t : tadj[f]) nb.insert(t);
                for (FaceId t : nb)
                    if (in_n[t]) nadj[f].push_back(t);
                if (nadj[f].size() > 2) fail(o, "G[N] has a vertex of degree > 2");
                links += nadj[f].size();
            }
            int components = 0;
            std::vector<int> seen(nf, -1);
            for (FaceId f = 0; f < nf; ++f)
                if (in_n[f] && seen[f] < 0) {
                    ++components;
                    auto d = oracle::bfs_distance(nadj, {f}, {});
                    for (FaceId t = 0; t < nf; ++t)
                        if (d[t] >= 0) seen[t] = 1;
                }
            if (links / 2 + components != nodes) fail(o, "G[N] has a cycle");
            for (FaceId f = 0; f < nf; ++f) {
                if (!g.faces[f].bounded() || g.faces[f].degree() != 3) continue;
                for (FaceId t : wadj[f])
                    if (g.faces[t].bounded() && g.faces[t].degree() == 3) fail(o, "adjacent triangles");
                for (FaceId t : tadj[f])
                    if (g.faces[t].bounded() && g.faces[t].degree() == 3) fail(o, "adjacent triangles");
            }
            art << nodes << ' ';
        }
    o.artifact = art.str();
    if (o.pass) o.detail = std::to_string(bad_total) + " bounded bad faces checked";
    return o;
}

// Criterion 3
Outcome long_path_pipeline() {
    Outcome o;
    std::ostringstream art;
    int instances = 0;
    std::set<std::string> audit_names;
    for (int n = 8; n <= kCorpusMaxN; ++n)
        for (const auto& g : corpus(n)) {
            ++instances;
            LongPathResult r;
            try {
                r = run_longpath(g);
            } catch (const std::exception& e) {
                fail(o, std::string("n=") + std::to_string(n) + ": " + e.what());
                continue;
            }
            for (const auto& a : r.audits) {
                audit_names.insert(a.name);
                if (!a.passed) fail(o, "audit " + a.name + " failed at n=" + std::to_string(n));
            }
            if (!verify_path(g, r.final_path).ok()) fail(o, "invalid final path");
            if (3LL * static_cast<long long>(r.final_path.size()) < 1LL * n * n - 7LL * n + 2)
                fail(o, "length bound at n=" + std::to_string(n));
            art << r.final_path.size() << ' ';
        }
    for (const char* need : {"P1", "P2", "P3", "Q1", "Q2", "Q3", "Q4"})
        if (!audit_names.count(need)) fail(o, std::string("audit ") + need + " never ran");
    o.artifact = art.str();
    if (o.pass) o.detail = std::to_string(instances) + " instances, n = 8..30";
    return o;
}

// Criterion 4
Outcome initial_family_bound() {
    Outcome o;
    std::ostringstream art;
    int paths = 0;
    for (int n = 3; n <= kCorpusMaxN; ++n)
        for (const auto& g : corpus(n)) {
            const auto fam = initial_family(g, longpath_tunnels(g));
            long long total = 0;
            for (const auto& p : fam.paths) {
                ++paths;
                total += static_cast<long long>(p.size());
                const int i = g.faces[p.front()].level;
                const int j = g.faces[p.back()].level;
                if (g.left_unbounded[i] != p.front() || g.right_unbounded[j] != p.back()) {
                    fail(o, "path does not run from l_i to r_j");
                    continue;
                }
                const long long len = static_cast<long long>(p.size());
                if (2 * i <= n && 2 * j <= n && len < i + j + 1) fail(o, "|Q| < i+j+1");
                if (2 * i >= n && 2 * j >= n && len < 2LL * n - i - j + 1) fail(o, "|Q| < 2n-i-j+1");
            }
            if (4 * total < 1LL * n * n - 4LL * n) fail(o, "sum below n^2/4 - n at n=" + std::to_string(n));
            art << total << ' ';
        }
    o.artifact = art.str();
    if (o.pass) o.detail = std::to_string(paths) + " initial paths";
    return o;
}

// Criterion 5
Outcome gluing() {
    Outcome o;
    std::ostringstream art;
    const auto& g = corpus(8).front();
    const auto fam = initial_family(g, longpath_tunnels(g));
    if (fam.paths.size() != 4) fail(o, "expected 4 initial paths");
    std::set<std::vector<FaceId>> distinct;
    int glued = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
            DualPath p;
            try {
                p = glue(g, fam, {a, b});
            } catch (const std::exception& e) {
                fail(o, e.what());
                continue;
            }
            ++glued;
            if (!verify_path(g, p).ok()) fail(o, "glued path invalid");
            distinct.insert(p.faces);
            art << format_path(p);
        }
    if (glued != 6 || distinct.size() != 6) fail(o, std::to_string(distinct.size()) + " distinct paths");
    o.artifact = art.str();
    if (o.pass) o.detail = "6 distinct valid paths";
    return o;
}

// Criterion 6
Outcome oracle_dominance() {
    Outcome o;
    std::ostringstream art;
    SearchBudget b;
    b.threads = threads();
    int searched = 0;
    for (int n = 2; n <= 6; ++n)
        for (int s = 0; s < 10; ++s) {
            const auto& g = corpus(n)[s];
            const auto r = longest_path(g, b);
            ++searched;
            if (!r.complete) {
                fail(o, "search incomplete at n=" + std::to_string(n));
                continue;
            }
            const auto built = run_longpath(g).final_path.size();
            if (r.length < static_cast<int>(built)) fail(o, "oracle below construction");
            if (r.length > upper_bound_bipartite(g)) fail(o, "oracle above bipartite bound");
            if (!verify_path(g, r.witness).ok() || static_cast<int>(r.witness.size()) != r.length)
                fail(o, "bad oracle witness");
            art << r.length << '/' << built << ' ';
        }
    o.artifact = art.str();
    if (o.pass) o.detail = std::to_string(searched) + " complete searches";
    return o;
}

// Criterion 7
Outcome extremal_length() {
    Outcome o;
    std::ostringstream art;
    SearchBudget b;
    b.threads = threads();
    for (int k : {1, 3}) {
        const auto inst = gen_theorem2(k);
        const auto conv = lines_to_wiring(inst.lines);
        const auto g = build_plane_graph(conv.diagram);
        const auto r = longest_alternating(build_directed_dual(g, *conv.colors), g, *conv.colors, b);
        if (!r.complete) fail(o, "search incomplete for k=" + std::to_string(k));
        if (r.length > 14 * k) fail(o, "k=" + std::to_string(k) + " longest " + std::to_string(r.length));
        if (!verify_path(g, r.witness, &*conv.colors).ok()) fail(o, "witness not alternating");
        art << k << ':' << r.length << ' ';
        o.detail += "k=" + std::to_string(k) + " longest " + std::to_string(r.length) + " <= " + std::to_string(14 * k) + "; ";
    }
    o.artifact = art.str();
    return o;
}

// Criterion 8
Outcome extremal_structure() {
    Outcome o;
    std::ostringstream art;
    for (int k : {1, 3}) {
        const auto inst = gen_theorem2(k);
        const auto conv = lines_to_wiring(inst.lines);
        const auto g = build_plane_graph(conv.diagram);
        for (const auto& c : {check_dotted_incidences(inst), check_slab_separation(inst, conv, g), check_slab_budget(inst)}) {
            if (!c.passed) fail(o, "k=" + std::to_string(k) + " " + c.name + ": " + c.detail);
            art << k << c.name << c.passed << c.detail << '\n';
        }
    }
    o.artifact = art.str();
    if (o.pass) o.detail = "incidences, separation, slab budget for k = 1, 3";
    return o;
}

// Criterion 9
Outcome random_construction() {
    Outcome o;
    std::ostringstream art;
    const int n = 60;
    const auto g = build_plane_graph(gen_random_wiring(n, 2024));
    const std::uint64_t seed = 7;
    std::map<int, int> blocked, successes;
    int middle = 0;
    for (int w : {default_width(n), 8, 16}) {
        for (int t = 0; t < 200; ++t) {
            const auto c = trial_coloring(n, seed, t);
            const auto r = construct_thm3(g, c, w);
            if (!r.success) {
                ++blocked[w];
                continue;
            }
            ++successes[w];
            const auto rep = verify_path(g, r.glued, &c);
            if (!rep.ok()) fail(o, "w=" + std::to_string(w) + " trial " + std::to_string(t) + ": " + rep.to_string());
            for (const auto& tp : r.tunnels)
                if (tp.middle && tp.found) {
                    ++middle;
                    if (static_cast<long long>(tp.faces.size()) + 4LL * w < 2LL * tp.tunnel * (w - 1))
                        fail(o, "middle tunnel bound fails in tunnel " + std::to_string(tp.tunnel));
                }
            art << t << ':' << r.glued.size() << ' ';
        }
        art << '\n';
    }
    const int w0 = default_width(n);
    if (successes[w0] == 0) fail(o, "no successful trial");
    if (blocked[16] > blocked[8]) fail(o, "blocking at w=16 exceeds w=8");
    const auto mc = monte_carlo(g, 16, 200, seed, threads());
    if (mc.blocked != blocked[16]) fail(o, "monte carlo disagrees with direct trials");
    art << mc.csv();
    o.artifact = art.str();
    if (o.pass)
        o.detail = "w=" + std::to_string(w0) + " success " + std::to_string(successes[w0]) + "/200; blocked w=8 " +
                   std::to_string(blocked[8]) + ", w=16 " + std::to_string(blocked[16]) + "; " +
                   std::to_string(middle) + " middle tunnels bounded";
    return o;
}

// Criterion 10
Outcome reach_boundary() {
    Outcome o;
    std::ostringstream art;
    int samples = 0;
    for (int s = 0; samples < 1000; ++s) {
        const int n = 3 + s % 18;
        const auto g = build_plane_graph(gen_random_wiring(n, 500 + s));
        const auto c = trial_coloring(n, 11, s);
        const auto dd = build_directed_dual(g, c);
        for (int q = 0; q < 5 && samples < 1000; ++q, ++samples) {
            const FaceId z = static_cast<FaceId>((s * 7 + q * 13) % g.faces.size());
            const auto r = reach(dd, g, c, z);
            std::vector<char> in(g.faces.size(), 0);
            for (FaceId f : r.faces) in[f] = 1;
            for (const auto& v : g.vertices) {
                std::set<Color> colors;
                for (EdgeId e : v.edges)
                    if (in[g.edges[e].below] != in[g.edges[e].above]) colors.insert(c[g.edges[e].line]);
                if (colors.size() > 1) fail(o, "red and blue boundary edges meet");
            }
            art << r.faces.size() << ' ';
        }
    }
    o.artifact = art.str();
    if (o.pass) o.detail = std::to_string(samples) + " reach sets";
    return o;
}

std::vector<Criterion> criteria() {
    return {
        {1, "counting identities", 1, counting},
        {2, "tunnel structure", 5, structure},
        {3, "long path pipeline", 30, long_path_pipeline},
        {4, "initial family bound", 5, initial_family_bound},
        {5, "exponential gluing", 1, gluing},
        {6, "oracle dominance", 60, oracle_dominance},
        {7, "alternating path bound", 600, extremal_length},
        {8, "extremal instance structure", 30, extremal_structure},
        {9, "random coloring construction", 300, random_construction},
        {10, "reach boundary", 60, reach_boundary},
    };
}

}  // namespace

int main() {
    bool all = true;
    std::vector<std::string> first;
    // Warm the corpus so criterion timings measure the checks.
    for (int n = 3; n <= kCorpusMaxN; ++n) corpus(n);
    for (const auto& c : criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_s) fail(o, "took longer than the time limit");
        all = all && o.pass;
        first.push_back(o.artifact);
        std::printf("criterion %2d %-30s %s  %.2fs  %s\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::string diff;
    const auto list = criteria();
    for (std::size_t k = 0; k < list.size(); ++k) {
        std::string again;
        try {
            again = list[k].run().artifact;
        } catch (const std::exception& e) {
            again = e.what();
        }
        if (again != first[k] && diff.empty()) diff = "criterion " + std::to_string(list[k].id) + " artifact differs";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && diff.empty();
    std::printf("criterion 11 %-30s %s  %.2fs  %s\n", "determinism", diff.empty() ? "PASS" : "FAIL", secs,
                diff.empty() ? "second run byte-identical" : diff.c_str());
    return all ? 0 : 1;
}
