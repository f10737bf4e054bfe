#pragma once

#include "dualpath/plane_graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dualpath {

/// Ordered face sequence; certificates[k] separates faces[k] and faces[k+1].
/// Certificates may be left empty, in which case verification infers them.
struct DualPath {
    std::vector<FaceId> faces;
    std::vector<EdgeId> certificates;

    std::size_t size() const { return faces.size(); }
    bool empty() const { return faces.empty(); }
    bool operator==(const DualPath&) const = default;
};

/// Fills in the lowest-id shared edge for every consecutive pair.
/// Throws InternalInvariantError if two consecutive faces are not adjacent.
DualPath with_certificates(const PlaneGraph& g, std::vector<FaceId> faces);

enum class ViolationKind { UnknownFace, RepeatedFace, NotAdjacent, BadCertificate, CertificateCount, Alternation };

struct Violation {
    ViolationKind kind;
    std::size_t index;
    std::string message;
};

struct PathReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks faces, adjacency, certificates and repeats; with a coloring also
/// checks that consecutive certificates alternate in color. Never throws on
/// a bad path: every problem is reported.
PathReport verify_path(const PlaneGraph& g, const DualPath& p, const ColorVector* coloring = nullptr);

/// `path <len>`, one face id per line, optional `edges:` section.
std::string format_path(const DualPath& p);
DualPath parse_path(std::string_view text);

}  // namespace dualpath
