#pragma once

#include "dualpath/dual_path.hpp"
#include "dualpath/plane_graph.hpp"
#include "dualpath/tunnels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dualpath {

/// Length n, both colors present. Throws ValidationError (MonochromaticColoring).
void validate_coloring(const PlaneGraph& g, const ColorVector& c);

/// Faces of even level are black. Blue edges are crossed white -> black,
/// red edges black -> white.
struct DirectedDual {
    struct Arc {
        FaceId from = kNone;
        FaceId to = kNone;
        EdgeId edge = kNone;
    };
    std::vector<Arc> arcs;  // one per edge, indexed by edge id
    std::vector<std::vector<int>> out;  // arc ids per face, ascending target
    std::vector<std::vector<int>> in;
    std::vector<std::uint8_t> black;

    std::size_t face_count() const { return out.size(); }
};

DirectedDual build_directed_dual(const PlaneGraph& g, const ColorVector& c);

/// Shortest directed path from any source to any target, staying inside
/// `allowed` (empty = everything). Ties resolve towards smaller face ids.
std::optional<std::vector<FaceId>> directed_path(const DirectedDual& dd, const std::vector<FaceId>& sources,
                                                 const std::vector<std::uint8_t>& targets,
                                                 const std::vector<std::uint8_t>& allowed = {});

/// Directed path translated to faces plus the crossed edges as certificates.
DualPath to_dual_path(const DirectedDual& dd, const PlaneGraph& g, const std::vector<FaceId>& faces);

struct ReachResult {
    std::vector<FaceId> faces;  // ascending
    std::vector<EdgeId> boundary;  // edges separating reach from its complement
    bool boundary_monochromatic_at_vertices = true;
    std::string detail;
};

/// With `check_boundary`, a red and a blue boundary edge at one vertex
/// throws AuditFailure.
ReachResult reach(const DirectedDual& dd, const PlaneGraph& g, const ColorVector& c, FaceId z,
                  bool check_boundary = false);

/// Minimum number of lines separating each face from an unbounded face.
struct DepthMap {
    std::vector<int> depth;
    int max_depth = 0;

    std::vector<std::uint8_t> outer(int w) const;
};

DepthMap compute_depth(const PlaneGraph& g);

/// 6 * ceil(log2 n) + 3.
int default_width(int n);

struct TunnelPath {
    int tunnel = 0;
    bool found = false;
    std::vector<FaceId> faces;
    /// Shortest tunnel-internal walks from the ends to unbounded faces of the tunnel.
    int extension_start = -1;
    int extension_end = -1;
    bool middle = false;
    /// |P_i| + 4w >= 2i(w-1); only meaningful for middle tunnels.
    bool bound_holds = true;
};

struct Thm3Result {
    int w = 0;
    int last_tunnel = 0;  // l
    bool success = false;
    std::optional<std::vector<FaceId>> left_path;   // L
    std::optional<std::vector<FaceId>> right_path;  // R
    /// l_tilde[k], r_tilde[k] for k = 1..2l (index 0 unused).
    std::vector<FaceId> l_tilde, r_tilde;
    std::vector<TunnelPath> tunnels;  // i = 1..l-1
    DualPath glued;
    std::vector<int> a_events;  // tunnels without P_i
    bool b_event = false;
    int middle_tunnels = 0;
    int middle_bound_failures = 0;
    std::vector<std::string> log;
};

/// The randomized construction for a fixed coloring. Missing paths are
/// reported as events, not thrown. Throws ValidationError if w < 3 or the
/// tunnels degenerate to a single one (w > n).
Thm3Result construct_thm3(const PlaneGraph& g, const ColorVector& c, int w);

struct TrialRecord {
    int trial = 0;
    bool success = false;
    std::size_t path_length = 0;
    int a_events = 0;
    bool b_event = false;
    bool path_valid = true;
    int middle_tunnels = 0;
    int middle_bound_failures = 0;
};

struct MonteCarloStats {
    int n = 0;
    int w = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> records;
    int successes = 0;
    int b_events = 0;
    int blocked = 0;  // trials with any event
    std::vector<int> a_counts;  // per tunnel index
    double mean_length = 0;
    std::size_t p10 = 0, p50 = 0, p90 = 0;
    /// Failure probability bounds; >= 1 means vacuous at this size.
    double bound_a = 0;
    double bound_b = 0;

    double success_rate() const { return trials ? static_cast<double>(successes) / trials : 0; }
    double blocking_rate() const { return trials ? static_cast<double>(blocked) / trials : 0; }
    std::string csv() const;
    std::string summary() const;
};

/// Coloring of trial t is drawn from mt19937_64 seeded by seed_seq{seed, t};
/// monochromatic draws are redrawn. Results do not depend on `threads`.
ColorVector trial_coloring(int n, std::uint64_t seed, int trial);
MonteCarloStats monte_carlo(const PlaneGraph& g, int w, int trials, std::uint64_t seed, int threads = 1);

}  // namespace dualpath
