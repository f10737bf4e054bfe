#include "dualpath/plane_graph.hpp"

#include "dualpath/error.hpp"

#include <algorithm>

namespace dualpath {

std::vector<VertexId> Face::vertices() const {
    std::vector<VertexId> out;
    if (left_vertex != kNone) out.push_back(left_vertex);
    out.insert(out.end(), lower_vertices.begin(), lower_vertices.end());
    out.insert(out.end(), upper_vertices.begin(), upper_vertices.end());
    if (right_vertex != kNone) out.push_back(right_vertex);
    return out;
}

std::vector<EdgeId> Face::edges() const {
    std::vector<EdgeId> out(lower_edges);
    out.insert(out.end(), upper_edges.begin(), upper_edges.end());
    return out;
}

int PlaneGraph::unbounded_count() const {
    return static_cast<int>(std::count_if(faces.begin(), faces.end(), [](const Face& f) { return !f.bounded(); }));
}

std::vector<EdgeId> PlaneGraph::shared_edges(FaceId a, FaceId b) const {
    std::vector<EdgeId> out;
    if (!has_face(a) || !has_face(b) || a == b) return out;
    for (EdgeId e : faces[a].edges())
        if (edges[e].other(a) == b) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

PlaneGraph build_plane_graph(const WiringDiagram& d, bool permissive) {
    validate(d, permissive);
    const int n = d.n;
    PlaneGraph g;
    g.diagram = d;
    g.level_edges.resize(n);

    auto new_edge = [&](int line, int level, FaceId below, FaceId above, VertexId left) {
        Edge e;
        e.line = line;
        e.level = level;
        e.below = below;
        e.above = above;
        e.left = left;
        e.position = static_cast<int>(g.level_edges[level].size());
        g.edges.push_back(e);
        EdgeId id = static_cast<EdgeId>(g.edges.size()) - 1;
        g.level_edges[level].push_back(id);
        g.faces[below].upper_edges.push_back(id);
        g.faces[above].lower_edges.push_back(id);
        return id;
    };

    std::vector<int> wire(n);
    std::vector<FaceId> gap_face(n + 1);
    std::vector<EdgeId> current(n);
    for (int gap = 0; gap <= n; ++gap) {
        Face f;
        f.level = gap;
        f.side = gap == 0 ? FaceSide::Bottom : gap == n ? FaceSide::Top : FaceSide::Left;
        g.faces.push_back(f);
        gap_face[gap] = gap;
    }
    for (int p = 0; p < n; ++p) {
        wire[p] = p;
        current[p] = new_edge(p, p, p, p + 1, kNone);
    }

    for (int gap : d.crossings) {
        const int p = gap - 1;
        const VertexId v = static_cast<VertexId>(g.vertices.size());
        const FaceId below = gap_face[gap - 1];
        const FaceId closing = gap_face[gap];
        const FaceId above = gap_face[gap + 1];

        Vertex vx;
        vx.gap = gap;
        vx.lower_line = wire[p];
        vx.upper_line = wire[p + 1];
        const EdgeId left_lower = current[p];
        const EdgeId left_upper = current[p + 1];
        g.edges[left_lower].right = v;
        g.edges[left_upper].right = v;
        g.faces[closing].right_vertex = v;
        g.faces[below].upper_vertices.push_back(v);
        g.faces[above].lower_vertices.push_back(v);

        Face fresh;
        fresh.level = gap;
        fresh.left_vertex = v;
        g.faces.push_back(fresh);
        const FaceId right = static_cast<FaceId>(g.faces.size()) - 1;
        gap_face[gap] = right;

        std::swap(wire[p], wire[p + 1]);
        const EdgeId right_lower = new_edge(wire[p], p, below, right, v);
        const EdgeId right_upper = new_edge(wire[p + 1], p + 1, right, above, v);
        current[p] = right_lower;
        current[p + 1] = right_upper;

        vx.edges = {right_upper, left_upper, left_lower, right_lower};
        vx.faces = {above, closing, below, right};
        g.vertices.push_back(vx);
    }

    for (int gap = 1; gap < n; ++gap)
        if (gap_face[gap] != gap) g.faces[gap_face[gap]].side = FaceSide::Right;
    g.left_unbounded.resize(n + 1);
    g.right_unbounded.resize(n + 1);
    for (int gap = 0; gap <= n; ++gap) {
        g.left_unbounded[gap] = gap;
        g.right_unbounded[gap] = gap_face[gap];
    }
    return g;
}

int face_level(const PlaneGraph& g, FaceId f) {
    if (!g.has_face(f)) throw ValidationError("unknown face " + std::to_string(f));
    return g.faces[f].level;
}

FaceId unbounded_face(const PlaneGraph& g, Side side, int level) {
    if (level < 0 || level > g.n()) throw ValidationError("level " + std::to_string(level) + " outside [0, n]");
    return side == Side::Left ? g.left_unbounded[level] : g.right_unbounded[level];
}

DualGraph build_dual(const PlaneGraph& g) {
    DualGraph dg;
    dg.node_count = static_cast<int>(g.faces.size());
    dg.adjacency.resize(dg.node_count);
    dg.parity.resize(dg.node_count);
    for (FaceId f = 0; f < dg.node_count; ++f) dg.parity[f] = static_cast<std::uint8_t>(g.faces[f].level % 2);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        if (dg.parity[ed.below] == dg.parity[ed.above])
            throw InternalInvariantError("edge " + std::to_string(e) + " joins faces of equal level parity");
        dg.arcs.push_back({ed.below, ed.above, e});
        dg.adjacency[ed.below].push_back({ed.above, e});
        dg.adjacency[ed.above].push_back({ed.below, e});
    }
    for (auto& links : dg.adjacency)
        std::sort(links.begin(), links.end(),
                  [](const auto& x, const auto& y) { return x.to != y.to ? x.to < y.to : x.edge < y.edge; });
    return dg;
}

}  // namespace dualpath
