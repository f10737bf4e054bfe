#pragma once

#include "dualpath/cyclotomic.hpp"
#include "dualpath/error.hpp"
#include "dualpath/plane_graph.hpp"
#include "dualpath/wiring.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualpath {

/// a*x + b*y + c = 0 with real coefficients in a cyclotomic field.
struct Line {
    Cyc a, b, c;
};

/// Lines share one field. Rational input lives in Q = Q(zeta_1).
struct LineSet {
    std::shared_ptr<const CyclotomicField> field;
    std::vector<Line> lines;
    std::optional<ColorVector> colors;
    /// Some coefficient was written as a decimal: near-coincidences within
    /// the float tolerance are rejected as well as exact ones.
    bool float_mode = false;

    std::size_t size() const { return lines.size(); }
};

inline constexpr long double kFloatTolerance = 1e-9L;

class ParallelLines : public ValidationError {
public:
    ParallelLines(int i, int j)
        : ValidationError("ParallelLines: lines " + std::to_string(i) + " and " + std::to_string(j)), pair_{i, j} {}
    std::pair<int, int> witness() const { return pair_; }

private:
    std::pair<int, int> pair_;
};

class CoincidentCrossings : public ValidationError {
public:
    CoincidentCrossings(int i, int j, int k)
        : ValidationError("CoincidentCrossings: lines " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                          std::to_string(k) + " meet in one point"),
          triple_{i, j, k} {}
    std::array<int, 3> witness() const { return triple_; }

private:
    std::array<int, 3> triple_;
};

/// `lines <n>` then rows `slope intercept [R|B]`; values as integers, `p/q`
/// or decimals. Colors must be given on all rows or none.
LineSet parse_lines(std::string_view text);
/// Rational line sets only.
std::string format_lines(const LineSet& ls);

Line line_from_slope(const std::shared_ptr<const CyclotomicField>& f, const mpq_class& slope, const mpq_class& intercept);
Line line_through(const Cyc& x1, const Cyc& y1, const Cyc& x2, const Cyc& y2);
/// Determinant of the three homogeneous coefficient rows; zero iff the
/// lines are concurrent or pairwise parallel.
Cyc concurrency_det(const Line& l1, const Line& l2, const Line& l3);

struct Crossing {
    int lower = kNone;  // line indices
    int upper = kNone;
    long double x = 0;
};

struct WiringConversion {
    WiringDiagram diagram;
    /// line index of pseudoline p (= initial height p from the bottom)
    std::vector<int> line_of_pseudoline;
    std::optional<ColorVector> colors;  // per pseudoline
    /// crossings[v] is vertex v of the plane graph
    std::vector<Crossing> crossings;
};

/// Sweeps the lines left to right. Initial order at x -> -inf is by
/// descending slope from the bottom. Throws ParallelLines,
/// CoincidentCrossings, or ValidationError for vertical lines.
WiringConversion lines_to_wiring(const LineSet& ls);

/// Every three lines are checked exactly for a common point.
void check_simple_exact(const LineSet& ls);

/// Side lines of a regular k-gon with inradius 1, in Q(zeta_{4k}).
/// Side j has outer normal angle pi*(4j+3)/(2k); no side is vertical.
LineSet gen_polygon_extension(int k);

struct TwinPair {
    int first = kNone;  // line indices
    int second = kNone;
    int slab = 0;       // the pair lives in slabs `slab` and `slab + K`
};

struct BicoloredInstance {
    LineSet lines;  // 3k red, then 2k blue
    int k = 0;
    /// Polygon size K = 3k. Dotted line d passes through the centre at angle pi*(2d+1)/(2K).
    int polygon = 0;
    std::vector<int> dotted;
    /// Slab m is the unbounded sector between rays at angles pi*(2m+1)/(2K)
    /// and pi*(2m+3)/(2K), outside the polygon; m = 0..2K-1.
    std::vector<int> marked_slabs;
    std::vector<TwinPair> twins;
    /// Separation actually used after retries.
    mpq_class delta;
};

/// Throws ValidationError (BadParameter / PerturbationFailure).
BicoloredInstance gen_theorem2(int k);

/// Uniform adjacent-inversion sampling; reproducible for a seed.
WiringDiagram gen_random_wiring(int n, std::uint64_t seed);

struct GeometryCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Every red-red crossing lies on a dotted line; every red line meets each
/// dotted line at a red-red crossing except exactly once on the polygon.
GeometryCheck check_dotted_incidences(const BicoloredInstance& inst);
/// At most (K-1)/2 red lines cross the interior of each slab.
GeometryCheck check_slab_budget(const BicoloredInstance& inst);
/// Blue lines cross every dotted line inside the polygon and run off to
/// infinity inside their two marked slabs.
GeometryCheck check_blue_confinement(const BicoloredInstance& inst);

/// A point inside every face of the converted arrangement.
std::vector<std::pair<long double, long double>> face_reference_points(const LineSet& ls, const WiringConversion& conv,
                                                                       const PlaneGraph& g);

/// Slab index of a point outside the polygon, or -1 inside.
int slab_of_point(const BicoloredInstance& inst, long double x, long double y);

/// The middle part is the polygon interior. Every connected set of
/// bicolored faces outside it touches at most one marked slab.
GeometryCheck check_slab_separation(const BicoloredInstance& inst, const WiringConversion& conv, const PlaneGraph& g);

}  // namespace dualpath
