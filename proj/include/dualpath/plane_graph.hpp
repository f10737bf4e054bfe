#pragma once

#include "dualpath/wiring.hpp"

#include <array>
#include <vector>

namespace dualpath {

using FaceId = int;
using EdgeId = int;
using VertexId = int;
inline constexpr int kNone = -1;

enum class FaceSide : std::uint8_t { Bounded, Left, Right, Bottom, Top };

/// A crossing. Edges are listed counter-clockwise starting east:
/// right-upper, left-upper, left-lower, right-lower. faces[k] lies between
/// edges[k] and edges[k+1]: top, left, bottom, right.
struct Vertex {
    int gap = 0;  // 1-based gap of the crossing in the wiring diagram
    int lower_line = kNone;  // pseudoline below the crossing on its left side
    int upper_line = kNone;
    std::array<EdgeId, 4> edges{};
    std::array<FaceId, 4> faces{};

    /// The face sharing only this vertex with `f`, or kNone if `f` is not incident.
    FaceId opposite(FaceId f) const {
        for (int k = 0; k < 4; ++k)
            if (faces[k] == f) return faces[(k + 2) % 4];
        return kNone;
    }
};

struct Edge {
    int line = kNone;
    int level = 0;
    FaceId below = kNone;
    FaceId above = kNone;
    VertexId left = kNone;
    VertexId right = kNone;
    int position = 0;  // index along the x-monotone curve of its level

    FaceId other(FaceId f) const { return f == below ? above : below; }
};

struct Face {
    int level = 0;
    FaceSide side = FaceSide::Bounded;
    VertexId left_vertex = kNone;
    VertexId right_vertex = kNone;
    std::vector<EdgeId> lower_edges;  // left to right
    std::vector<EdgeId> upper_edges;
    std::vector<VertexId> lower_vertices;  // interior chain vertices, left to right
    std::vector<VertexId> upper_vertices;

    bool bounded() const { return side == FaceSide::Bounded; }
    int degree() const { return static_cast<int>(lower_edges.size() + upper_edges.size()); }
    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;
};

/// Cells of a pseudoline arrangement built by sweeping its wiring diagram.
/// Face ids: the n+1 leftmost faces bottom-to-top, then one per crossing.
struct PlaneGraph {
    WiringDiagram diagram;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<FaceId> left_unbounded;   // l_i, i = 0..n
    std::vector<FaceId> right_unbounded;  // r_i, i = 0..n
    std::vector<std::vector<EdgeId>> level_edges;  // per level, left to right

    int n() const { return diagram.n; }
    FaceId bottom() const { return left_unbounded.front(); }
    FaceId top() const { return left_unbounded.back(); }
    int unbounded_count() const;
    bool full() const { return diagram.is_full(); }

    /// Edges separating `a` and `b` in increasing id order.
    std::vector<EdgeId> shared_edges(FaceId a, FaceId b) const;
    bool adjacent(FaceId a, FaceId b) const { return !shared_edges(a, b).empty(); }
    bool has_face(FaceId f) const { return f >= 0 && f < static_cast<int>(faces.size()); }
};

PlaneGraph build_plane_graph(const WiringDiagram& d, bool permissive = false);

int face_level(const PlaneGraph& g, FaceId f);

enum class Side { Left, Right };
FaceId unbounded_face(const PlaneGraph& g, Side side, int level);

/// Faces as nodes, one arc per arrangement edge (multi-adjacencies kept).
struct DualGraph {
    struct Arc {
        FaceId a = kNone;
        FaceId b = kNone;
        EdgeId edge = kNone;
    };
    struct Link {
        FaceId to = kNone;
        EdgeId edge = kNone;
    };
    int node_count = 0;
    std::vector<Arc> arcs;
    std::vector<std::vector<Link>> adjacency;  // sorted by (to, edge)
    std::vector<std::uint8_t> parity;           // level mod 2: 0 black, 1 white
};

DualGraph build_dual(const PlaneGraph& g);

}  // namespace dualpath
