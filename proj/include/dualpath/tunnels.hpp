#pragma once

#include "dualpath/plane_graph.hpp"

#include <vector>

namespace dualpath {

/// Faces grouped into horizontal tunnels of `width` consecutive levels.
///
/// Level j belongs to tunnel (j + offset) / width. With offset 0 tunnel i is
/// levels i*w .. (i+1)*w-1. The long-path construction uses width 2 with
/// offset 1, where the bottom face is alone in tunnel 0 and tunnel i >= 1
/// holds levels 2i-1 and 2i.
///
/// A wall is identified by the level of its edges: the level-j curve is a wall
/// iff levels j and j+1 lie in different tunnels.
struct TunnelDecomposition {
    int width = 1;
    int offset = 0;
    int last = 0;  // index of the last tunnel
    std::vector<int> face_tunnel;
    std::vector<std::uint8_t> edge_is_wall;
    std::vector<std::uint8_t> face_bad;
    std::vector<FaceId> tunnel_neighbor;  // for bad faces with exactly one tunnel edge
    std::vector<int> face_wall;           // wall level carrying the face's wall edges, or kNone
    std::vector<EdgeId> leftmost_wall_edge;
    std::vector<std::vector<FaceId>> tunnels;  // face ids per tunnel, ascending

    int tunnel_of_level(int level) const { return (level + offset) / width; }
    bool is_wall_level(int level) const { return tunnel_of_level(level) != tunnel_of_level(level + 1); }
    bool good(FaceId f) const { return !face_bad[f]; }
    bool wall(EdgeId e) const { return edge_is_wall[e] != 0; }
};

TunnelDecomposition decompose_tunnels(const PlaneGraph& g, int width, int offset = 0);

/// The decomposition used by the long-path construction (width 2, offset 1).
TunnelDecomposition longpath_tunnels(const PlaneGraph& g);

/// Wall levels the vertex lies on (zero, one or two entries).
std::vector<int> vertex_walls(const PlaneGraph& g, const TunnelDecomposition& td, VertexId v);

/// Wall edges of `f` in wall order.
std::vector<EdgeId> wall_edges(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f);

/// Faces across the wall edges of `f`, left to right; repeated neighbours collapse.
std::vector<FaceId> wall_neighbors(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f);

/// Tunnel edges of `f` (edges to faces in the same tunnel).
std::vector<EdgeId> tunnel_edges(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f);

}  // namespace dualpath
