#pragma once

#include "dualpath/bicolored.hpp"
#include "dualpath/dual_path.hpp"
#include "dualpath/plane_graph.hpp"

#include <cstdint>
#include <vector>

namespace dualpath {

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double time_limit_s = 300;
    bool bipartite_pruning = true;
    /// Monochromatic faces only as path endpoints (alternating search).
    bool exclude_monochromatic = true;
    /// Root split over start faces; the result does not depend on it.
    int threads = 1;
};

/// Throws ValidationError for non-positive limits.
void validate_budget(const SearchBudget& b);

struct OracleResult {
    /// false: a limit was hit and `length` is only the best found so far.
    bool complete = false;
    int length = 0;
    /// Lexicographically smallest maximum path (when complete).
    DualPath witness;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

/// Longest simple path in the dual graph, counted in faces.
OracleResult longest_path(const PlaneGraph& g, const SearchBudget& budget = {});

/// Longest simple directed path in the directed dual.
OracleResult longest_alternating(const DirectedDual& dd, const PlaneGraph& g, const ColorVector& c,
                                 const SearchBudget& budget = {});

/// Faces whose boundary edges all carry one color.
std::vector<std::uint8_t> monochromatic_faces(const PlaneGraph& g, const ColorVector& c);

}  // namespace dualpath
