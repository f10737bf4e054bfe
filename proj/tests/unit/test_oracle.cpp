#include <doctest.h>

#include "dualpath/geometry.hpp"
#include "dualpath/longpath.hpp"
#include "dualpath/oracle.hpp"
#include "oracles.hpp"

#include <set>

using namespace dualpath;

namespace {

// Unpruned directed search; faces with one boundary color only as endpoints.
int longest_alternating_oracle(const PlaneGraph& g, const ColorVector& c) {
    const std::size_t nf = g.faces.size();
    std::vector<std::vector<FaceId>> out(nf);
    std::vector<std::set<Color>> seen(nf);
    for (const auto& e : g.edges) {
        seen[e.below].insert(c[e.line]);
        seen[e.above].insert(c[e.line]);
        const bool below_black = g.faces[e.below].level % 2 == 0;
        const FaceId black = below_black ? e.below : e.above;
        const FaceId white = below_black ? e.above : e.below;
        if (c[e.line] == Color::Blue)
            out[white].push_back(black);
        else
            out[black].push_back(white);
    }
    int best = 0;
    std::vector<char> used(nf, 0);
    auto dfs = [&](auto&& self, FaceId f, int len) -> void {
        best = std::max(best, len);
        if (len > 1 && seen[f].size() < 2) return;
        for (FaceId t : out[f])
            if (!used[t]) {
                used[t] = 1;
                self(self, t, len + 1);
                used[t] = 0;
            }
    };
    for (FaceId s = 0; s < static_cast<FaceId>(nf); ++s) {
        used[s] = 1;
        dfs(dfs, s, 1);
        used[s] = 0;
    }
    return best;
}

}  // namespace

TEST_CASE("tiny arrangements") {
    CHECK(longest_path(build_plane_graph(gen_random_wiring(1, 0))).length == 2);
    auto r = longest_path(build_plane_graph(gen_random_wiring(2, 0)));
    CHECK(r.complete);
    CHECK(r.length == 4);
    CHECK(r.witness.size() == 4);
}

TEST_CASE("longest path matches exhaustive search") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto g = build_plane_graph(gen_random_wiring(n, seed));
            auto r = longest_path(g);
            REQUIRE(r.complete);
            CHECK(r.length == oracle::longest_simple_path(oracle::face_adjacency(g)));
            CHECK(r.witness.size() == static_cast<std::size_t>(r.length));
            CHECK(verify_path(g, r.witness).ok());
        }
}

TEST_CASE("longest path lies between the construction and the bipartite bound") {
    for (int n = 2; n <= 6; ++n) {
        auto g = build_plane_graph(gen_random_wiring(n, 21));
        auto r = longest_path(g);
        REQUIRE(r.complete);
        CHECK(r.length <= upper_bound_bipartite(g));
        CHECK(r.length >= static_cast<int>(run_longpath(g).final_path.size()));
    }
}

TEST_CASE("thread count does not change the answer") {
    auto g = build_plane_graph(gen_random_wiring(6, 5));
    SearchBudget one, four;
    four.threads = 4;
    auto a = longest_path(g, one);
    auto b = longest_path(g, four);
    CHECK(a.length == b.length);
    CHECK(a.witness == b.witness);
}

TEST_CASE("budgets") {
    auto g = build_plane_graph(gen_random_wiring(7, 1));
    SearchBudget tiny;
    tiny.node_limit = 10;
    auto r = longest_path(g, tiny);
    CHECK_FALSE(r.complete);
    CHECK(r.length >= 1);
    SearchBudget bad;
    bad.node_limit = 0;
    CHECK_THROWS_AS(validate_budget(bad), ValidationError);
    bad = {};
    bad.time_limit_s = -1;
    CHECK_THROWS_AS(longest_path(g, bad), ValidationError);
}

TEST_CASE("alternating search matches exhaustive search") {
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 5; ++t) {
            auto g = build_plane_graph(gen_random_wiring(n, 30 + t));
            auto c = trial_coloring(n, 8, t);
            auto r = longest_alternating(build_directed_dual(g, c), g, c);
            REQUIRE(r.complete);
            CHECK(r.length == longest_alternating_oracle(g, c));
            CHECK(verify_path(g, r.witness, &c).ok());
        }
}

TEST_CASE("monochromatic faces") {
    auto g = build_plane_graph(gen_random_wiring(5, 2));
    auto c = parse_colors("RRRRB");
    auto mono = monochromatic_faces(g, c);
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
        std::set<Color> s;
        for (EdgeId e : g.faces[f].edges()) s.insert(c[g.edges[e].line]);
        CHECK((mono[f] != 0) == (s.size() == 1));
    }
}

TEST_CASE("extremal instances have short alternating paths") {
    for (int k : {1, 3}) {
        auto inst = gen_theorem2(k);
        auto conv = lines_to_wiring(inst.lines);
        auto g = build_plane_graph(conv.diagram);
        auto r = longest_alternating(build_directed_dual(g, *conv.colors), g, *conv.colors);
        REQUIRE(r.complete);
        CHECK(r.length <= 14 * k);
        CHECK(longest_alternating_oracle(g, *conv.colors) == r.length);
    }
}
