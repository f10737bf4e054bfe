#pragma once

#include "dualpath/dual_path.hpp"
#include "dualpath/tunnels.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dualpath {

enum class Phase { Initial, AfterStep1, AfterStep2 };

/// Tunnel paths P_1..P_m (stored 0-based), each oriented left to right.
struct PathFamily {
    std::vector<std::vector<FaceId>> paths;
    Phase phase = Phase::Initial;
};

enum class FaceStatus : std::uint8_t { Traversed, NotTraversed, Unbounded };

/// Partition of the faces into T (bounded traversed), N (bounded not
/// traversed) and U (unbounded).
std::vector<FaceStatus> classify_faces(const PlaneGraph& g, const PathFamily& family);

/// Glueable: disjoint paths, ends of P_i/P_{i+1} adjacent for odd i and
/// starts adjacent for even i (1-based).
bool is_glueable(const PlaneGraph& g, const PathFamily& family, std::string* why = nullptr);

PathFamily initial_family(const PlaneGraph& g, const TunnelDecomposition& td);

/// Glues the paths with the given 1-based indices into one dual path, running
/// connectors through the unbounded faces. An empty subset means all paths.
DualPath glue(const PlaneGraph& g, const PathFamily& family, const std::vector<int>& subset = {});

enum class Via : std::uint8_t { Initial, Edge, Vertex, Terminal, Redistribution, Deletion };

struct ChargeEvent {
    Via via;
    FaceId source = kNone;
    FaceId sink = kNone;  // kNone for deletions
    int through = kNone;  // edge or vertex id
    int amount = 0;
    std::string note;
};

/// One unit of charge: where it started and where it currently sits.
struct ChargeUnit {
    FaceId source = kNone;
    FaceId holder = kNone;
    Via via = Via::Initial;
};

struct ChargeLedger {
    std::vector<ChargeUnit> units;
    std::vector<ChargeEvent> events;

    int charge(FaceId f) const;
    int total() const { return static_cast<int>(units.size()); }
    std::vector<int> charges(std::size_t face_count) const;
    std::string trace() const;
};

ChargeLedger initial_charge(const PlaneGraph& g, const PathFamily& family);

struct HeadRuleTargets {
    FaceId edge_target = kNone;
    EdgeId edge = kNone;
    FaceId vertex_target = kNone;
    VertexId vertex = kNone;
};

/// Where a bad bounded face sends its charge: across its leftmost wall edge
/// and diagonally through that edge's right vertex.
HeadRuleTargets head_rule_targets(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f);

struct AuditEntry {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Bookkeeping shared by the two rerouting steps.
struct RerouteState {
    PathFamily family;
    ChargeLedger ledger;
    /// Step-1 replaced path edges (ordered pair) -> the face inserted next to the first one.
    std::map<std::pair<FaceId, FaceId>, FaceId> replaced;
    std::vector<std::string> log;
    std::vector<AuditEntry> audits;
};

struct StepOptions {
    bool audit = true;
};

RerouteState step1(const PlaneGraph& g, const TunnelDecomposition& td, const PathFamily& family,
                   const ChargeLedger& ledger, const StepOptions& opt = {});

struct Step2Result {
    RerouteState state;
    DualPath final_path;
};

Step2Result step2(const PlaneGraph& g, const TunnelDecomposition& td, const PathFamily& initial,
                  RerouteState after_step1, const StepOptions& opt = {});

struct LongPathResult {
    TunnelDecomposition tunnels;
    PathFamily initial;
    PathFamily after_step1;
    PathFamily after_step2;
    ChargeLedger ledger;
    DualPath final_path;
    std::vector<AuditEntry> audits;
    std::vector<std::string> log;
    int traversed = 0;
    int not_traversed = 0;
    int unbounded = 0;

    bool all_passed() const;
    std::string report() const;
};

/// Runs the full construction. With `audit`, every proof condition is checked
/// and the first failure throws AuditFailure carrying the event trace.
LongPathResult run_longpath(const PlaneGraph& g, const StepOptions& opt = {});

/// |p| >= i+j+1 for i,j <= n/2 and |p| >= 2n-i-j+1 for i,j >= n/2, where p
/// runs from l_i to r_j (either direction). Mixed cases pass vacuously.
bool claim_length_check(const PlaneGraph& g, const DualPath& p);

/// 2 * min(#even-level faces, #odd-level faces) + 1.
int upper_bound_bipartite(const PlaneGraph& g);

/// (n^2 - 7n + 2) / 3, the guaranteed final length, rounded up.
long long guaranteed_length(int n);

}  // namespace dualpath
