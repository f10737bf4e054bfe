#include "dualpath/tunnels.hpp"

#include "dualpath/error.hpp"

#include <algorithm>

namespace dualpath {

std::vector<int> vertex_walls(const PlaneGraph& g, const TunnelDecomposition& td, VertexId v) {
    const int gap = g.vertices[v].gap;
    std::vector<int> out;
    if (td.is_wall_level(gap - 1)) out.push_back(gap - 1);
    if (td.is_wall_level(gap)) out.push_back(gap);
    return out;
}

std::vector<EdgeId> wall_edges(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.faces[f].edges())
        if (td.wall(e)) out.push_back(e);
    std::sort(out.begin(), out.end(), [&](EdgeId a, EdgeId b) {
        const auto& ea = g.edges[a];
        const auto& eb = g.edges[b];
        return ea.level != eb.level ? ea.level < eb.level : ea.position < eb.position;
    });
    return out;
}

std::vector<FaceId> wall_neighbors(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f) {
    std::vector<FaceId> out;
    for (EdgeId e : wall_edges(g, td, f)) {
        FaceId o = g.edges[e].other(f);
        if (out.empty() || out.back() != o) out.push_back(o);
    }
    return out;
}

std::vector<EdgeId> tunnel_edges(const PlaneGraph& g, const TunnelDecomposition& td, FaceId f) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.faces[f].edges())
        if (!td.wall(e)) out.push_back(e);
    return out;
}

TunnelDecomposition decompose_tunnels(const PlaneGraph& g, int width, int offset) {
    const int n = g.n();
    if (width < 1 || width > n + 1)
        throw ValidationError("tunnel width " + std::to_string(width) + " outside [1, n+1]");
    if (offset < 0 || offset >= width) throw ValidationError("tunnel offset must lie in [0, width)");

    TunnelDecomposition td;
    td.width = width;
    td.offset = offset;
    td.last = td.tunnel_of_level(n);
    const auto face_count = g.faces.size();
    td.face_tunnel.resize(face_count);
    td.tunnels.resize(td.last + 1);
    for (FaceId f = 0; f < static_cast<FaceId>(face_count); ++f) {
        td.face_tunnel[f] = td.tunnel_of_level(g.faces[f].level);
        td.tunnels[td.face_tunnel[f]].push_back(f);
    }
    td.edge_is_wall.resize(g.edges.size());
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e)
        td.edge_is_wall[e] = td.face_tunnel[g.edges[e].below] != td.face_tunnel[g.edges[e].above];

    td.face_bad.assign(face_count, 0);
    td.tunnel_neighbor.assign(face_count, kNone);
    td.face_wall.assign(face_count, kNone);
    td.leftmost_wall_edge.assign(face_count, kNone);
    for (FaceId f = 0; f < static_cast<FaceId>(face_count); ++f) {
        // Bad iff one wall carries every vertex of the face.
        std::vector<int> common;
        bool first = true;
        for (VertexId v : g.faces[f].vertices()) {
            auto walls = vertex_walls(g, td, v);
            if (first) {
                common = walls;
                first = false;
            } else {
                std::vector<int> keep;
                std::set_intersection(common.begin(), common.end(), walls.begin(), walls.end(),
                                      std::back_inserter(keep));
                common.swap(keep);
            }
        }
        td.face_bad[f] = first || !common.empty();

        auto te = tunnel_edges(g, td, f);
        if (td.face_bad[f] && te.size() == 1) td.tunnel_neighbor[f] = g.edges[te[0]].other(f);
        auto we = wall_edges(g, td, f);
        if (!we.empty()) {
            td.leftmost_wall_edge[f] = we.front();
            td.face_wall[f] = g.edges[we.front()].level;
        }
    }
    return td;
}

TunnelDecomposition longpath_tunnels(const PlaneGraph& g) {
    if (g.n() < 1) throw ValidationError("empty arrangement");
    return decompose_tunnels(g, 2, 1);
}

}  // namespace dualpath
