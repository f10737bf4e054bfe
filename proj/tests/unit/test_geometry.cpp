#include <doctest.h>

#include "dualpath/geometry.hpp"
#include "dualpath/plane_graph.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace dualpath;

namespace {

std::string lines_text(const std::vector<std::pair<long, long>>& rows) {
    std::ostringstream os;
    os << "lines " << rows.size() << '\n';
    for (auto [m, b] : rows) os << m << ' ' << b << '\n';
    return os.str();
}

}  // namespace

TEST_CASE("two crossing lines") {
    auto conv = lines_to_wiring(parse_lines("lines 2\n1 0\n-1 0\n"));
    CHECK(conv.diagram.n == 2);
    CHECK(conv.diagram.crossings == std::vector<int>{1});
    CHECK(conv.line_of_pseudoline == std::vector<int>{0, 1});
}

TEST_CASE("sweep order matches floating point crossing order") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> slope(-40, 40), icpt(-300, 300);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<long, long>> rows;
        std::set<long> used;
        while (rows.size() < 6) {
            long m = slope(rng);
            if (used.insert(m).second) rows.push_back({m, icpt(rng)});
        }
        std::vector<std::pair<double, double>> dl;
        for (auto [m, b] : rows) dl.push_back({double(m), double(b)});
        // Skip draws with coincident crossing abscissae; the order of those is not unique.
        auto expect = oracle::line_crossing_order(dl);
        std::vector<double> xs;
        for (std::size_t i = 0; i < dl.size(); ++i)
            for (std::size_t j = i + 1; j < dl.size(); ++j)
                xs.push_back((dl[j].second - dl[i].second) / (dl[i].first - dl[j].first));
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end(), [](double a, double b) { return b - a < 1e-9; }) != xs.end())
            continue;
        WiringConversion conv;
        try {
            conv = lines_to_wiring(parse_lines(lines_text(rows)));
        } catch (const CoincidentCrossings&) {
            continue;
        }
        CHECK(oracle::swap_sequence(6, conv.diagram.crossings) == expect);
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("polygon extensions") {
    for (int k : {3, 5, 7, 9}) {
        auto ls = gen_polygon_extension(k);
        CHECK(ls.size() == static_cast<std::size_t>(k));
        auto conv = lines_to_wiring(ls);
        CHECK(static_cast<long long>(conv.diagram.crossings.size()) == oracle::choose2(k));
        CHECK(oracle::swap_sequence(k, conv.diagram.crossings).size() == conv.diagram.crossings.size());
    }
    CHECK_THROWS_AS(gen_polygon_extension(1), ValidationError);
    CHECK_THROWS_AS(gen_polygon_extension(4), ValidationError);
}

TEST_CASE("degenerate line sets carry witnesses") {
    try {
        lines_to_wiring(parse_lines("lines 3\n1 0\n2 5\n1 3\n"));
        FAIL("parallel lines accepted");
    } catch (const ParallelLines& e) {
        CHECK(e.witness() == std::pair<int, int>{0, 2});
    }
    try {
        lines_to_wiring(parse_lines("lines 4\n1 0\n-1 0\n3 7\n2 0\n"));
        FAIL("three lines through the origin accepted");
    } catch (const CoincidentCrossings& e) {
        CHECK(e.witness() == std::array<int, 3>{0, 1, 3});
    }
    // Within the float tolerance of a common point.
    CHECK_THROWS_AS(lines_to_wiring(parse_lines("lines 3\n1 0\n-1 0\n2 0.0000000000001\n")), CoincidentCrossings);
    CHECK_THROWS_AS(parse_lines("lines 2\n1 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_lines("lines 2\n1 0 R\n2 0\n"), ValidationError);
}

TEST_CASE("line colors follow the pseudolines") {
    auto conv = lines_to_wiring(parse_lines("lines 3\n-1 0 R\n1 0 B\n0 1 B\n"));
    REQUIRE(conv.colors);
    for (int p = 0; p < 3; ++p) CHECK((*conv.colors)[p] == (conv.line_of_pseudoline[p] == 0 ? Color::Red : Color::Blue));
}

TEST_CASE("extremal bicolored instances") {
    auto inst = gen_theorem2(1);
    CHECK(inst.lines.size() == 5);
    CHECK(inst.polygon == 3);
    CHECK(inst.marked_slabs.size() == 2);
    CHECK(inst.twins.size() == 1);
    for (int k : {1, 3}) {
        auto in = gen_theorem2(k);
        CHECK(in.lines.size() == static_cast<std::size_t>(5 * k));
        auto conv = lines_to_wiring(in.lines);
        auto g = build_plane_graph(conv.diagram);
        CHECK(check_dotted_incidences(in).passed);
        CHECK(check_slab_budget(in).passed);
        CHECK(check_blue_confinement(in).passed);
        CHECK(check_slab_separation(in, conv, g).passed);
        REQUIRE(conv.colors);
        int red = 0;
        for (Color c : *conv.colors) red += c == Color::Red;
        CHECK(red == 3 * k);
    }
    CHECK_THROWS_AS(gen_theorem2(0), ValidationError);
    CHECK_THROWS_AS(gen_theorem2(2), ValidationError);
}

TEST_CASE("random wiring diagrams") {
    for (int n : {1, 2, 5, 17}) {
        auto a = gen_random_wiring(n, 99);
        auto b = gen_random_wiring(n, 99);
        CHECK(a.crossings == b.crossings);
        CHECK_NOTHROW(validate(a));
        CHECK(static_cast<long long>(oracle::swap_sequence(n, a.crossings).size()) == oracle::choose2(n));
    }
    CHECK(gen_random_wiring(12, 1).crossings != gen_random_wiring(12, 2).crossings);
}
