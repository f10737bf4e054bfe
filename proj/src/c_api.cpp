#include "dualpath/dualpath.h"

#include "dualpath/bicolored.hpp"
#include "dualpath/geometry.hpp"
#include "dualpath/longpath.hpp"
#include "dualpath/oracle.hpp"
#include "dualpath/render.hpp"

#include <json.hpp>

#include <sstream>

struct arr_arrangement {
    dualpath::PlaneGraph g;
    std::optional<dualpath::ColorVector> colors;
};

struct arr_string {
    std::string text;
};

namespace {

using namespace dualpath;

thread_local std::string last_error;

template <class F>
arr_status guard(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const AuditFailure& e) {
        last_error = e.what();
        if (!e.trace().empty()) last_error += "\n" + e.trace();
        return ARR_AUDIT;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<arr_status>(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return ARR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return ARR_INTERNAL;
    }
}

void emit(arr_string** out, std::string s) {
    if (out) *out = new arr_string{std::move(s)};
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::Usage, what);
}

const ColorVector& coloring_of(const arr_arrangement* a) {
    if (!a->colors) throw ValidationError("this operation needs a coloring");
    return *a->colors;
}

void require_full(const arr_arrangement* a) {
    if (!a->g.full()) throw ValidationError("operation needs a full arrangement, not a partial diagram");
}

arr_arrangement* wrap(const WiringDiagram& d, std::optional<ColorVector> colors, bool permissive = false) {
    auto* a = new arr_arrangement{build_plane_graph(d, permissive), std::move(colors)};
    return a;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s;
}

}  // namespace

extern "C" {

const char* arr_last_error(void) { return last_error.c_str(); }
const char* arr_string_data(const arr_string* s) { return s ? s->text.c_str() : ""; }
size_t arr_string_length(const arr_string* s) { return s ? s->text.size() : 0; }
void arr_string_free(arr_string* s) { delete s; }

arr_status arr_load_wiring(const char* text, int permissive, arr_arrangement** out) {
    return guard([&] {
        require(text && out, "null argument");
        WiringFile wf = parse_wiring(text, permissive != 0);
        *out = wrap(wf.diagram, wf.colors, permissive != 0);
        return ARR_OK;
    });
}

arr_status arr_load_lines(const char* text, arr_arrangement** out) {
    return guard([&] {
        require(text && out, "null argument");
        const LineSet ls = parse_lines(text);
        const WiringConversion conv = lines_to_wiring(ls);
        *out = wrap(conv.diagram, conv.colors);
        return ARR_OK;
    });
}

void arr_free(arr_arrangement* a) { delete a; }

int arr_n(const arr_arrangement* a) { return a ? a->g.n() : 0; }

arr_status arr_set_coloring(arr_arrangement* a, const char* letters) {
    return guard([&] {
        require(a && letters, "null argument");
        ColorVector c = parse_colors(letters);
        if (static_cast<int>(c.size()) != a->g.n())
            throw ValidationError("coloring has " + std::to_string(c.size()) + " letters for " +
                                  std::to_string(a->g.n()) + " pseudolines");
        a->colors = std::move(c);
        return ARR_OK;
    });
}

arr_status arr_to_wiring(const arr_arrangement* a, arr_string** out) {
    return guard([&] {
        require(a && out, "null argument");
        emit(out, format_wiring(a->g.diagram, a->colors ? &*a->colors : nullptr));
        return ARR_OK;
    });
}

arr_status arr_gen_polygon(int k, arr_arrangement** out) {
    return guard([&] {
        require(out, "null argument");
        const WiringConversion conv = lines_to_wiring(gen_polygon_extension(k));
        *out = wrap(conv.diagram, std::nullopt);
        return ARR_OK;
    });
}

arr_status arr_gen_theorem2(int k, arr_arrangement** out, arr_string** checks) {
    return guard([&] {
        require(out, "null argument");
        const BicoloredInstance inst = gen_theorem2(k);
        const WiringConversion conv = lines_to_wiring(inst.lines);
        std::unique_ptr<arr_arrangement> a(wrap(conv.diagram, conv.colors));
        std::vector<GeometryCheck> list{check_dotted_incidences(inst), check_slab_budget(inst),
                                        check_blue_confinement(inst), check_slab_separation(inst, conv, a->g)};
        std::ostringstream os;
        os << "delta " << inst.delta.get_str() << '\n';
        bool all = true;
        for (const auto& c : list) {
            all = all && c.passed;
            os << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) os << " : " << c.detail;
            os << '\n';
        }
        emit(checks, os.str());
        *out = a.release();
        if (!all) {
            last_error = "structural check failed";
            return ARR_AUDIT;
        }
        return ARR_OK;
    });
}

arr_status arr_gen_random(int n, uint64_t seed, arr_arrangement** out) {
    return guard([&] {
        require(out, "null argument");
        *out = wrap(gen_random_wiring(n, seed), std::nullopt);
        return ARR_OK;
    });
}

arr_status arr_stats(const arr_arrangement* a, int json, arr_string** out) {
    return guard([&] {
        require(a && out, "null argument");
        const auto& g = a->g;
        const DepthMap depth = compute_depth(g);
        if (json) {
            nlohmann::ordered_json j;
            j["vertices"] = g.vertices.size();
            j["edges"] = g.edges.size();
            j["faces"] = g.faces.size();
            j["unbounded"] = g.unbounded_count();
            j["max_depth"] = depth.max_depth;
            emit(out, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "V=" << g.vertices.size() << " E=" << g.edges.size() << " F=" << g.faces.size()
               << " U=" << g.unbounded_count() << '\n';
            os << "max_depth=" << depth.max_depth << '\n';
            emit(out, os.str());
        }
        return ARR_OK;
    });
}

arr_status arr_longpath(const arr_arrangement* a, int audit, const int* subset, size_t subset_len, arr_string** report,
                        arr_string** path) {
    return guard([&] {
        require(a, "null argument");
        require(subset || subset_len == 0, "null subset");
        require_full(a);
        if (a->g.n() < 2) throw ValidationError("the construction needs at least two pseudolines");
        StepOptions opt;
        opt.audit = audit != 0;
        const LongPathResult r = run_longpath(a->g, opt);
        std::string text = r.report();
        DualPath out = r.final_path;
        if (subset_len) {
            std::vector<int> chosen(subset, subset + subset_len);
            out = glue(a->g, r.initial, chosen);
            const auto check = verify_path(a->g, out);
            text += "subset " + join(chosen) + " length " + std::to_string(out.size()) + '\n';
            if (!check.ok()) throw InternalInvariantError("subset glue produced an invalid path: " + check.to_string());
        }
        emit(report, std::move(text));
        emit(path, format_path(out));
        if (!r.all_passed()) {
            last_error = "audit failure";
            return ARR_AUDIT;
        }
        return ARR_OK;
    });
}

arr_search_options arr_search_defaults(void) {
    const SearchBudget b;
    return arr_search_options{0, b.node_limit, b.time_limit_s, 1};
}

arr_status arr_brute(const arr_arrangement* a, const arr_search_options* opt, arr_string** report, arr_string** path) {
    return guard([&] {
        require(a && opt, "null argument");
        require_full(a);
        SearchBudget b;
        b.node_limit = opt->node_limit;
        b.time_limit_s = opt->time_limit_s;
        b.threads = opt->threads;
        OracleResult r;
        std::ostringstream os;
        if (opt->alternating) {
            const ColorVector& c = coloring_of(a);
            r = longest_alternating(build_directed_dual(a->g, c), a->g, c, b);
            os << "longest_alternating " << r.length << '\n';
        } else {
            r = longest_path(a->g, b);
            os << "longest " << r.length << '\n';
            os << "upper_bound_bipartite " << upper_bound_bipartite(a->g) << '\n';
        }
        os << "complete " << (r.complete ? "yes" : "no") << '\n';
        os << "nodes " << r.nodes << '\n';
        emit(report, os.str());
        emit(path, format_path(r.witness));
        if (!r.complete) {
            last_error = "search budget exhausted; best length found " + std::to_string(r.length);
            return ARR_INCOMPLETE;
        }
        return ARR_OK;
    });
}

arr_status arr_reach(const arr_arrangement* a, int face, int check_boundary, arr_string** out) {
    return guard([&] {
        require(a && out, "null argument");
        require_full(a);
        const ColorVector& c = coloring_of(a);
        const ReachResult r = reach(build_directed_dual(a->g, c), a->g, c, face, check_boundary != 0);
        std::ostringstream os;
        os << "reach " << r.faces.size() << '\n';
        os << "faces: " << join(r.faces) << '\n';
        os << "boundary: " << join(r.boundary) << '\n';
        os << "boundary_monochromatic_at_vertices " << (r.boundary_monochromatic_at_vertices ? "yes" : "no") << '\n';
        emit(out, os.str());
        return ARR_OK;
    });
}

arr_status arr_random_coloring(const arr_arrangement* a, const arr_monte_carlo_options* opt, arr_string** table,
                               arr_string** summary) {
    return guard([&] {
        require(a && opt, "null argument");
        require_full(a);
        const int w = opt->w ? opt->w : default_width(a->g.n());
        const MonteCarloStats s = monte_carlo(a->g, w, opt->trials, opt->seed, opt->threads);
        if (opt->json) {
            nlohmann::ordered_json j;
            j["n"] = s.n;
            j["w"] = s.w;
            j["trials"] = s.trials;
            j["seed"] = s.seed;
            j["records"] = nlohmann::ordered_json::array();
            for (const auto& r : s.records)
                j["records"].push_back({{"trial", r.trial},
                                        {"success", r.success},
                                        {"path_length", r.path_length},
                                        {"num_A_events", r.a_events},
                                        {"B_event", r.b_event}});
            j["successes"] = s.successes;
            j["blocked"] = s.blocked;
            j["b_events"] = s.b_events;
            j["a_events_per_tunnel"] = std::vector<int>(s.a_counts.begin() + (s.a_counts.empty() ? 0 : 1), s.a_counts.end());
            j["mean_length"] = s.mean_length;
            j["bound_A"] = s.bound_a;
            j["bound_B"] = s.bound_b;
            emit(table, j.dump(2) + "\n");
        } else {
            emit(table, s.csv());
        }
        emit(summary, s.summary());
        return ARR_OK;
    });
}

arr_status arr_render(const arr_arrangement* a, const arr_render_options* opt, arr_string** svg) {
    return guard([&] {
        require(a && opt && svg, "null argument");
        RenderSpec spec;
        spec.mode = opt->tunnel_mode ? RenderMode::Tunnel : RenderMode::Wiring;
        spec.w = opt->w;
        spec.offset = opt->offset;
        spec.width = opt->width;
        spec.height = opt->height;
        if (opt->path) spec.path = parse_path(opt->path);
        if (opt->use_coloring) spec.coloring = coloring_of(a);
        emit(svg, render_svg(a->g, spec));
        return ARR_OK;
    });
}

arr_status arr_verify_path(const arr_arrangement* a, const char* path_text, int alternating, arr_string** report) {
    return guard([&] {
        require(a && path_text, "null argument");
        const DualPath p = parse_path(path_text);
        const PathReport r = verify_path(a->g, p, alternating ? &coloring_of(a) : nullptr);
        emit(report, r.ok() ? "valid length " + std::to_string(p.size()) + "\n" : r.to_string());
        if (!r.ok()) {
            last_error = "path has " + std::to_string(r.violations.size()) + " violation(s)";
            return ARR_VALIDATION;
        }
        return ARR_OK;
    });
}

}  // extern "C"
