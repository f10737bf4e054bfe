#pragma once

#include "dualpath/dual_path.hpp"
#include "dualpath/plane_graph.hpp"

#include <optional>
#include <string>

namespace dualpath {

enum class RenderMode { Wiring, Tunnel };

struct Palette {
    std::string plain = "#000000";
    std::string red = "#d62728";
    std::string blue = "#1f77b4";
    std::string wall = "#f4a3a3";
    std::string stripe = "#f2f2f2";
    std::string path = "#2ca02c";
    std::string label = "#555555";
};

struct RenderSpec {
    RenderMode mode = RenderMode::Wiring;
    /// 0 picks 30 px per crossing column / wire row.
    int width = 0;
    int height = 0;
    /// Tunnel mode only; must be >= 1 there.
    int w = 0;
    int offset = 0;
    std::optional<DualPath> path;
    std::optional<ColorVector> coloring;
    Palette palette;
};

/// Pseudolines run on wires at heights 0..n-1 and cross diagonally, so a
/// level-j edge lies on wire j. Throws ValidationError for a bad spec.
std::string render_svg(const PlaneGraph& g, const RenderSpec& spec);

/// Drawing position of a point inside face f, in the same pixel frame.
struct Point2 {
    double x = 0, y = 0;
};
Point2 face_anchor(const PlaneGraph& g, const RenderSpec& spec, FaceId f);

}  // namespace dualpath
