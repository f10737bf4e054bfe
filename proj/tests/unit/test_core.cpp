#include <doctest.h>

#include "dualpath/geometry.hpp"
#include "dualpath/plane_graph.hpp"
#include "dualpath/tunnels.hpp"
#include "dualpath/wiring.hpp"
#include "oracles.hpp"

#include <set>

using namespace dualpath;

namespace {

PlaneGraph graph_of(int n, std::vector<int> word) {
    WiringDiagram d;
    d.n = n;
    d.crossings = std::move(word);
    return build_plane_graph(d);
}

}  // namespace

TEST_CASE("single pseudoline") {
    auto g = graph_of(1, {});
    CHECK(g.vertices.size() == 0);
    CHECK(g.edges.size() == 1);
    CHECK(g.faces.size() == 2);
    CHECK(g.unbounded_count() == 2);
    auto dg = build_dual(g);
    CHECK(dg.node_count == 2);
    CHECK(dg.arcs.size() == 1);
}

TEST_CASE("two crossing pseudolines") {
    auto g = graph_of(2, {1});
    std::multiset<int> levels;
    for (const auto& f : g.faces) levels.insert(f.level);
    CHECK(levels == std::multiset<int>{0, 1, 1, 2});

    // Hand enumeration: bottom, top and the two side faces form a 4-cycle.
    auto dg = build_dual(g);
    CHECK(dg.node_count == 4);
    CHECK(dg.arcs.size() == 4);
    auto adj = oracle::face_adjacency(g);
    for (const auto& a : adj) CHECK(a.size() == 2);
}

TEST_CASE("counts for n = 4") {
    auto g = graph_of(4, {1, 2, 3, 1, 2, 1});
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 16);
    CHECK(g.faces.size() == 11);
    CHECK(g.unbounded_count() == 8);
    CHECK(build_dual(g).arcs.size() == 16);
}

TEST_CASE("counting identities over random diagrams") {
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto g = build_plane_graph(gen_random_wiring(n, seed));
            CHECK(static_cast<long long>(g.vertices.size()) == oracle::choose2(n));
            CHECK(static_cast<long long>(g.edges.size()) == 1LL * n * n);
            CHECK(static_cast<long long>(g.faces.size()) == oracle::choose2(n) + n + 1);
            CHECK(g.unbounded_count() == 2 * n);
        }
}

TEST_CASE("vertex and face structure") {
    auto g = build_plane_graph(gen_random_wiring(7, 11));
    for (const auto& v : g.vertices) {
        // Alternating pseudolines around the vertex.
        CHECK(g.edges[v.edges[0]].line == g.edges[v.edges[2]].line);
        CHECK(g.edges[v.edges[1]].line == g.edges[v.edges[3]].line);
        CHECK(g.edges[v.edges[0]].line != g.edges[v.edges[1]].line);
    }
    auto adj = oracle::face_adjacency(g);
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
        if (!g.faces[f].bounded()) continue;
        CHECK(g.faces[f].degree() >= 3);
        if (g.faces[f].degree() == 3)
            for (FaceId t : adj[f]) CHECK_FALSE((g.faces[t].bounded() && g.faces[t].degree() == 3));
    }
    for (const auto& e : g.edges) {
        CHECK(g.faces[e.below].level == e.level);
        CHECK(g.faces[e.above].level == e.level + 1);
    }
}

TEST_CASE("face level equals BFS distance to the bottom face") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = build_plane_graph(gen_random_wiring(6, seed));
        auto d = oracle::bfs_distance(oracle::face_adjacency(g), {g.bottom()});
        for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) CHECK(face_level(g, f) == d[f]);
    }
    auto g = graph_of(4, {1, 2, 3, 1, 2, 1});
    CHECK(face_level(g, g.bottom()) == 0);
    CHECK(face_level(g, g.top()) == 4);
    CHECK_THROWS_AS(face_level(g, 99), ValidationError);
}

TEST_CASE("unbounded faces") {
    auto g = graph_of(3, {1, 2, 1});
    CHECK(unbounded_face(g, Side::Left, 0) == g.bottom());
    CHECK(unbounded_face(g, Side::Right, 0) == g.bottom());
    CHECK(unbounded_face(g, Side::Left, 3) == g.top());
    std::set<FaceId> all;
    for (int i = 0; i <= 3; ++i) {
        all.insert(unbounded_face(g, Side::Left, i));
        all.insert(unbounded_face(g, Side::Right, i));
    }
    CHECK(all.size() == 6);
    CHECK_THROWS_AS(unbounded_face(g, Side::Left, 4), ValidationError);
}

TEST_CASE("face ids follow the sweep") {
    auto g = graph_of(3, {1, 2, 1});
    for (int i = 0; i <= 3; ++i) CHECK(g.left_unbounded[i] == i);
    // Crossing v closes one face and opens face n+1+v.
    CHECK(g.faces[4].left_vertex == 0);
    CHECK(g.faces[5].left_vertex == 1);
    CHECK(g.faces[6].left_vertex == 2);
}

TEST_CASE("malformed diagrams") {
    WiringDiagram d;
    d.n = 3;
    d.crossings = {1, 1, 2};
    try {
        validate(d);
        FAIL("accepted a double crossing");
    } catch (const MalformedDiagram& e) {
        CHECK(e.crossing_index() == 1);
    }
    d.crossings = {1, 3, 2};
    CHECK_THROWS_AS(validate(d), MalformedDiagram);
    d.crossings = {1, 2};
    CHECK_THROWS_AS(validate(d), ValidationError);
    CHECK_NOTHROW(validate(d, true));
}

TEST_CASE("wiring text round trip") {
    auto wf = parse_wiring("# comment\nwiring 3\n1 2 1\ncolors: RBR\n");
    CHECK(wf.diagram.n == 3);
    CHECK(wf.diagram.crossings == std::vector<int>{1, 2, 1});
    REQUIRE(wf.colors);
    CHECK(format_wiring(wf.diagram, &*wf.colors) == "wiring 3\n1 2 1\ncolors: RBR\n");
    CHECK_THROWS_AS(parse_wiring("wiring 3\n1 2\n"), ValidationError);
    CHECK_NOTHROW(parse_wiring("wiring 3\n1 2\n", true));
    CHECK_THROWS_AS(parse_wiring("wiring 2\n1\ncolors: RX\n"), ValidationError);
}

TEST_CASE("tunnel decomposition") {
    auto g = graph_of(4, {1, 2, 3, 1, 2, 1});
    auto td = decompose_tunnels(g, 2);
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) CHECK(td.face_tunnel[f] == g.faces[f].level / 2);
    CHECK(td.last == 2);

    auto single = decompose_tunnels(g, 5);
    CHECK(single.last == 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) CHECK_FALSE(single.wall(e));
    CHECK_THROWS_AS(decompose_tunnels(g, 6), ValidationError);
    CHECK_THROWS_AS(decompose_tunnels(g, 0), ValidationError);
}

TEST_CASE("tunnels are caterpillars with bad leaves") {
    auto adj_all = [](const PlaneGraph& g, const TunnelDecomposition& td) {
        std::vector<std::vector<FaceId>> adj(g.faces.size());
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e)
            if (!td.wall(e)) {
                adj[g.edges[e].below].push_back(g.edges[e].above);
                adj[g.edges[e].above].push_back(g.edges[e].below);
            }
        return adj;
    };
    for (int n = 3; n <= 10; ++n)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto g = build_plane_graph(gen_random_wiring(n, seed));
            auto td = longpath_tunnels(g);
            auto adj = adj_all(g, td);
            for (const auto& t : td.tunnels) CHECK(oracle::is_caterpillar(t, adj));
            for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
                if (!td.face_bad[f] || !g.faces[f].bounded()) continue;
                REQUIRE(adj[f].size() == 1);
                CHECK(td.tunnel_neighbor[f] == adj[f].front());
                // The top face of an even arrangement closes a half-plane tunnel.
                CHECK((td.good(adj[f].front()) || adj[f].front() == g.top()));
            }
        }
}

TEST_CASE("wall edges of a face sit on one wall") {
    auto g = build_plane_graph(gen_random_wiring(9, 3));
    auto td = decompose_tunnels(g, 3);
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
        auto walls = wall_edges(g, td, f);
        if (walls.empty()) continue;
        for (EdgeId e : walls) CHECK(g.edges[e].level == g.edges[walls.front()].level);
    }
}

TEST_CASE("parity is a proper coloring") {
    auto g = build_plane_graph(gen_random_wiring(8, 5));
    auto dg = build_dual(g);
    for (const auto& a : dg.arcs) CHECK(dg.parity[a.a] != dg.parity[a.b]);
}
