#include "dualpath/dual_path.hpp"

#include "dualpath/error.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>

namespace dualpath {

DualPath with_certificates(const PlaneGraph& g, std::vector<FaceId> faces) {
    DualPath p;
    p.faces = std::move(faces);
    for (std::size_t k = 0; k + 1 < p.faces.size(); ++k) {
        auto shared = g.shared_edges(p.faces[k], p.faces[k + 1]);
        if (shared.empty())
            throw InternalInvariantError("faces " + std::to_string(p.faces[k]) + " and " +
                                         std::to_string(p.faces[k + 1]) + " are not adjacent");
        p.certificates.push_back(shared.front());
    }
    return p;
}

std::string PathReport::to_string() const {
    if (ok()) return "valid\n";
    std::ostringstream os;
    for (const auto& v : violations) os << "violation at " << v.index << ": " << v.message << '\n';
    return os.str();
}

namespace {

Color edge_color(const PlaneGraph& g, const ColorVector& coloring, EdgeId e) {
    return coloring[g.edges[e].line];
}

}  // namespace

PathReport verify_path(const PlaneGraph& g, const DualPath& p, const ColorVector* coloring) {
    PathReport r;
    auto add = [&](ViolationKind k, std::size_t i, std::string msg) { r.violations.push_back({k, i, std::move(msg)}); };

    std::unordered_set<FaceId> seen;
    bool faces_ok = true;
    for (std::size_t k = 0; k < p.faces.size(); ++k) {
        const FaceId f = p.faces[k];
        if (!g.has_face(f)) {
            add(ViolationKind::UnknownFace, k, "unknown face " + std::to_string(f));
            faces_ok = false;
        } else if (!seen.insert(f).second) {
            add(ViolationKind::RepeatedFace, k, "face " + std::to_string(f) + " repeats");
        }
    }
    if (!faces_ok) return r;
    if (coloring && static_cast<int>(coloring->size()) != g.n()) {
        add(ViolationKind::Alternation, 0, "coloring length differs from n");
        coloring = nullptr;
    }

    const std::size_t steps = p.faces.empty() ? 0 : p.faces.size() - 1;
    const bool explicit_certs = !p.certificates.empty() || steps == 0;
    if (explicit_certs && p.certificates.size() != steps) {
        add(ViolationKind::CertificateCount, 0,
            "expected " + std::to_string(steps) + " certificates, got " + std::to_string(p.certificates.size()));
        return r;
    }

    // Without certificates, track which colors each step can use.
    std::vector<std::uint8_t> options(steps, 0);  // bit 0 red, bit 1 blue
    for (std::size_t k = 0; k < steps; ++k) {
        const FaceId a = p.faces[k];
        const FaceId b = p.faces[k + 1];
        if (explicit_certs) {
            const EdgeId e = p.certificates[k];
            if (e < 0 || e >= static_cast<EdgeId>(g.edges.size()) ||
                !((g.edges[e].below == a && g.edges[e].above == b) || (g.edges[e].below == b && g.edges[e].above == a))) {
                add(ViolationKind::BadCertificate, k,
                    "edge " + std::to_string(e) + " does not separate faces " + std::to_string(a) + " and " +
                        std::to_string(b));
                continue;
            }
            if (coloring) options[k] = edge_color(g, *coloring, e) == Color::Red ? 1 : 2;
        } else {
            auto shared = g.shared_edges(a, b);
            if (shared.empty()) {
                add(ViolationKind::NotAdjacent, k,
                    "faces " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
                continue;
            }
            if (coloring)
                for (EdgeId e : shared) options[k] |= edge_color(g, *coloring, e) == Color::Red ? 1 : 2;
        }
    }
    if (!coloring || !r.ok() || steps < 2) return r;

    if (explicit_certs) {
        for (std::size_t k = 0; k + 1 < steps; ++k)
            if (options[k] == options[k + 1])
                add(ViolationKind::Alternation, k + 1, "consecutive certificates share a color");
        return r;
    }
    // Some certificate choice must alternate starting from red or from blue.
    std::size_t best_fail = 0;
    for (int start = 0; start < 2; ++start) {
        std::size_t k = 0;
        for (; k < steps; ++k) {
            const int want = ((start + static_cast<int>(k)) % 2) == 0 ? 1 : 2;
            if (!(options[k] & want)) break;
        }
        if (k == steps) return r;
        best_fail = std::max(best_fail, k);
    }
    add(ViolationKind::Alternation, best_fail, "no alternating certificate choice");
    return r;
}

std::string format_path(const DualPath& p) {
    std::ostringstream os;
    os << "path " << p.faces.size() << '\n';
    for (FaceId f : p.faces) os << f << '\n';
    if (!p.certificates.empty()) {
        os << "edges:\n";
        for (EdgeId e : p.certificates) os << e << '\n';
    }
    return os.str();
}

DualPath parse_path(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    DualPath p;
    bool header = false;
    bool in_edges = false;
    std::size_t declared = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line.rfind("path ", 0) != 0) throw ValidationError("expected 'path <len>' header");
            declared = std::stoul(line.substr(5));
            header = true;
            continue;
        }
        if (line == "edges:") {
            in_edges = true;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size()) throw ValidationError("bad id '" + line + "'");
        (in_edges ? p.certificates : p.faces).push_back(v);
    }
    if (!header) throw ValidationError("empty path file");
    if (p.faces.size() != declared) throw ValidationError("path length differs from header");
    return p;
}

}  // namespace dualpath
