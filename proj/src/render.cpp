#include "dualpath/render.hpp"

#include "dualpath/error.hpp"
#include "dualpath/tunnels.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dualpath {

namespace {

constexpr double kMargin = 20;
constexpr double kCell = 30;

struct Frame {
    int n = 0;
    int columns = 0;
    double dx = kCell, dy = kCell;
    double width = 0, height = 0;

    double col(VertexId v) const { return kMargin + (v + 1) * dx; }
    double left() const { return kMargin; }
    double right() const { return kMargin + columns * dx; }
    double y(double pos) const { return kMargin + (n - pos) * dy; }
};

Frame make_frame(const PlaneGraph& g, const RenderSpec& spec) {
    if (spec.width < 0 || spec.height < 0) throw ValidationError("render size must be non-negative");
    Frame fr;
    fr.n = g.n();
    fr.columns = static_cast<int>(g.vertices.size()) + 1;
    if (spec.width > 0) fr.dx = (spec.width - 2 * kMargin) / fr.columns;
    if (spec.height > 0) fr.dy = (spec.height - 2 * kMargin) / (fr.n + 1);
    if (fr.dx <= 0 || fr.dy <= 0) throw ValidationError("render size too small");
    fr.width = spec.width > 0 ? spec.width : 2 * kMargin + fr.columns * fr.dx;
    fr.height = spec.height > 0 ? spec.height : 2 * kMargin + (fr.n + 1) * fr.dy;
    return fr;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string points(const std::vector<Point2>& pts) {
    std::string s;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) s += ' ';
        s += num(pts[k].x) + ',' + num(pts[k].y);
    }
    return s;
}

// Edge drawn on its wire, bending into the crossings at both ends.
std::vector<Point2> edge_points(const PlaneGraph& g, const Frame& fr, EdgeId e) {
    const Edge& ed = g.edges[e];
    std::vector<Point2> pts;
    const double y = fr.y(ed.level);
    if (ed.left == kNone) {
        pts.push_back({fr.left(), y});
    } else {
        pts.push_back({fr.col(ed.left), fr.y(g.vertices[ed.left].gap - 0.5)});
        pts.push_back({fr.col(ed.left) + fr.dx / 2, y});
    }
    if (ed.right == kNone) {
        pts.push_back({fr.right(), y});
    } else {
        pts.push_back({fr.col(ed.right) - fr.dx / 2, y});
        pts.push_back({fr.col(ed.right), fr.y(g.vertices[ed.right].gap - 0.5)});
    }
    std::vector<Point2> out;
    for (const auto& p : pts)
        if (out.empty() || out.back().x != p.x || out.back().y != p.y) out.push_back(p);
    return out;
}

Point2 anchor(const PlaneGraph& g, const Frame& fr, FaceId f) {
    const Face& face = g.faces[f];
    const double xl = face.left_vertex == kNone ? fr.left() : fr.col(face.left_vertex);
    const double xr = face.right_vertex == kNone ? fr.right() : fr.col(face.right_vertex);
    return {(xl + xr) / 2, fr.y(face.level - 0.5)};
}

std::string line_color(const PlaneGraph& g, const RenderSpec& spec, EdgeId e) {
    if (!spec.coloring) return spec.palette.plain;
    return (*spec.coloring)[g.edges[e].line] == Color::Red ? spec.palette.red : spec.palette.blue;
}

}  // namespace

Point2 face_anchor(const PlaneGraph& g, const RenderSpec& spec, FaceId f) {
    if (!g.has_face(f)) throw ValidationError("unknown face " + std::to_string(f));
    return anchor(g, make_frame(g, spec), f);
}

std::string render_svg(const PlaneGraph& g, const RenderSpec& spec) {
    const Frame fr = make_frame(g, spec);
    const int n = g.n();
    if (spec.coloring && static_cast<int>(spec.coloring->size()) != n)
        throw ValidationError("coloring length differs from n");
    TunnelDecomposition td;
    if (spec.mode == RenderMode::Tunnel) {
        if (spec.w < 1 || spec.w > n + 1) throw ValidationError("tunnel mode needs a width in [1, n+1]");
        if (spec.offset < 0 || spec.offset >= spec.w) throw ValidationError("tunnel offset must lie in [0, width)");
        td.width = spec.w;
        td.offset = spec.offset;
    }
    if (spec.path)
        for (FaceId f : spec.path->faces)
            if (!g.has_face(f)) throw ValidationError("path names unknown face " + std::to_string(f));

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(fr.width) << "\" height=\""
       << num(fr.height) << "\" viewBox=\"0 0 " << num(fr.width) << ' ' << num(fr.height) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(fr.width) << "\" height=\"" << num(fr.height)
       << "\" fill=\"#ffffff\"/>\n";

    if (spec.mode == RenderMode::Tunnel) {
        os << "<g id=\"tunnels\">\n";
        const int last = td.tunnel_of_level(n);
        for (int i = 1; i <= last; i += 2) {
            int lo = n, hi = 0;
            for (int lev = 0; lev <= n; ++lev)
                if (td.tunnel_of_level(lev) == i) {
                    lo = std::min(lo, lev);
                    hi = std::max(hi, lev);
                }
            const double top = hi == n ? 0 : fr.y(hi);
            const double bottom = lo == 0 ? fr.height : fr.y(lo - 1);
            os << "<rect x=\"0\" y=\"" << num(top) << "\" width=\"" << num(fr.width) << "\" height=\""
               << num(bottom - top) << "\" fill=\"" << spec.palette.stripe << "\"/>\n";
        }
        os << "</g>\n<g id=\"edges\" fill=\"none\" stroke-width=\"2\">\n";
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
            const Edge& ed = g.edges[e];
            const bool wall = td.is_wall_level(ed.level);
            const std::string stroke = wall ? spec.palette.wall : line_color(g, spec, e);
            os << "<polyline class=\"" << (wall ? "wall" : "tunnel") << "\" points=\"" << points(edge_points(g, fr, e))
               << "\" stroke=\"" << stroke << "\"/>\n";
        }
        os << "</g>\n<g id=\"levels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" fill=\""
           << spec.palette.label << "\">\n";
        for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
            const Point2 p = anchor(g, fr, f);
            os << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y + 3) << "\">" << g.faces[f].level << "</text>\n";
        }
        os << "</g>\n";
    } else {
        os << "<g id=\"pseudolines\" fill=\"none\" stroke-width=\"2\">\n";
        std::vector<std::vector<EdgeId>> by_line(n);
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) by_line[g.edges[e].line].push_back(e);
        for (int line = 0; line < n; ++line) {
            auto& es = by_line[line];
            std::sort(es.begin(), es.end(), [&](EdgeId a, EdgeId b) {
                const VertexId la = g.edges[a].left, lb = g.edges[b].left;
                return la == kNone ? lb != kNone : (lb != kNone && la < lb);
            });
            std::vector<Point2> pts;
            for (EdgeId e : es)
                for (const auto& p : edge_points(g, fr, e))
                    if (pts.empty() || pts.back().x != p.x || pts.back().y != p.y) pts.push_back(p);
            const std::string stroke = es.empty() ? spec.palette.plain : line_color(g, spec, es.front());
            os << "<polyline id=\"line" << line << "\" points=\"" << points(pts) << "\" stroke=\"" << stroke
               << "\"/>\n";
        }
        os << "</g>\n";
    }

    if (spec.path && !spec.path->faces.empty()) {
        std::vector<Point2> pts;
        for (FaceId f : spec.path->faces) pts.push_back(anchor(g, fr, f));
        os << "<g id=\"path\" stroke=\"" << spec.palette.path << "\" fill=\"" << spec.palette.path << "\">\n";
        os << "<polyline points=\"" << points(pts) << "\" fill=\"none\" stroke-width=\"3\" stroke-opacity=\"0.7\"/>\n";
        os << "<circle cx=\"" << num(pts.front().x) << "\" cy=\"" << num(pts.front().y) << "\" r=\"4\"/>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dualpath
