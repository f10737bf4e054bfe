// arr: command-line front end over the C interface.
#include "dualpath/dualpath.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
    int code;
    std::string message;
};

struct StringDeleter {
    void operator()(arr_string* s) const { arr_string_free(s); }
};
struct ArrangementDeleter {
    void operator()(arr_arrangement* a) const { arr_free(a); }
};
using Str = std::unique_ptr<arr_string, StringDeleter>;
using Arrangement = std::unique_ptr<arr_arrangement, ArrangementDeleter>;

std::string text(const Str& s) { return s ? std::string(arr_string_data(s.get()), arr_string_length(s.get())) : ""; }

// Soft statuses still produce output; the exit code is reported after printing.
int check(arr_status st, bool soft = false) {
    if (st != ARR_OK && !soft) throw Failure{st, arr_last_error()};
    return st;
}

std::string read_file(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{ARR_USAGE, "cannot read " + path};
    os << in.rdbuf();
    return os.str();
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{ARR_USAGE, "cannot write " + path};
    out << content;
}

// `lines` files are swept into wiring diagrams on the fly.
Arrangement load(const std::string& path, bool permissive = false) {
    const std::string content = read_file(path);
    const auto first = content.find_first_not_of(" \t\r\n");
    arr_arrangement* a = nullptr;
    if (first != std::string::npos && content.compare(first, 5, "lines") == 0)
        check(arr_load_lines(content.c_str(), &a));
    else
        check(arr_load_wiring(content.c_str(), permissive ? 1 : 0, &a));
    return Arrangement(a);
}

void apply_coloring(const Arrangement& a, const std::string& letters) {
    if (!letters.empty()) check(arr_set_coloring(a.get(), letters.c_str()));
}

std::vector<int> parse_subset(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Failure{ARR_USAGE, "bad subset entry '" + item + "'"};
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long dual paths in pseudoline arrangements"};
    app.require_subcommand(1);
    int status = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a wiring diagram");
    gen->require_subcommand(1);
    std::string gen_out;
    int gen_k = 3, gen_n = 8;
    std::uint64_t gen_seed = 1;
    auto* gen_polygon = gen->add_subcommand("polygon", "Side lines of a regular k-gon");
    gen_polygon->add_option("--k", gen_k, "Polygon size (odd, >= 3)")->required();
    gen_polygon->add_option("-o,--output", gen_out, "Output file");
    auto* gen_thm2 = gen->add_subcommand("thm2", "Bicolored 3k red / 2k blue instance");
    gen_thm2->add_option("--k", gen_k, "Odd parameter k")->required();
    gen_thm2->add_option("-o,--output", gen_out, "Output file");
    auto* gen_random = gen->add_subcommand("random", "Random simple wiring diagram");
    gen_random->add_option("--n", gen_n, "Number of pseudolines")->required();
    gen_random->add_option("--seed", gen_seed, "Seed");
    gen_random->add_option("-o,--output", gen_out, "Output file");

    // from-lines
    auto* from_lines = app.add_subcommand("from-lines", "Convert a lines file to a wiring diagram");
    std::string input, output;
    from_lines->add_option("file", input, "Lines file")->required();
    from_lines->add_option("-o,--output", output, "Output file");

    // stats
    auto* stats = app.add_subcommand("stats", "Counts of vertices, edges, faces and depth");
    std::string format = "text";
    stats->add_option("file", input, "Wiring or lines file")->required();
    stats->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // longpath
    auto* longpath = app.add_subcommand("longpath", "Construct the long dual path");
    bool audit = false;
    std::string subset, svg_out, path_out;
    longpath->add_option("file", input, "Wiring or lines file")->required();
    longpath->add_flag("--audit", audit, "Stop at the first failed proof condition");
    longpath->add_option("--subset", subset, "Glue only these initial paths (1-based, comma separated)");
    longpath->add_option("--emit-svg", svg_out, "Write a tunnel diagram with the path");
    longpath->add_option("--path-out", path_out, "Write the path file");

    // brute
    auto* brute = app.add_subcommand("brute", "Exhaustive longest path search");
    arr_search_options search = arr_search_defaults();
    bool alternating = false;
    std::string coloring;
    brute->add_option("file", input, "Wiring or lines file")->required();
    brute->add_flag("--alternating", alternating, "Longest alternating path");
    brute->add_option("--coloring", coloring, "Letters R/B per pseudoline");
    brute->add_option("--node-limit", search.node_limit, "Node limit")->check(CLI::PositiveNumber);
    brute->add_option("--time-limit", search.time_limit_s, "Time limit in seconds")->check(CLI::PositiveNumber);
    brute->add_option("--threads", search.threads, "Worker threads")->check(CLI::PositiveNumber);
    brute->add_option("--path-out", path_out, "Write the witness path");

    // reach
    auto* reach = app.add_subcommand("reach", "Faces reachable by directed dual paths");
    int face = 0;
    bool check_boundary = false;
    reach->add_option("file", input, "Wiring or lines file")->required();
    reach->add_option("--face,--from", face, "Start face")->required();
    reach->add_option("--coloring", coloring, "Letters R/B per pseudoline");
    reach->add_flag("--check", check_boundary, "Fail if the boundary mixes colors at a vertex");

    // random-coloring
    auto* random_coloring = app.add_subcommand("random-coloring", "Monte Carlo runs of the randomized construction");
    arr_monte_carlo_options mc{0, 100, 1, 1, 0};
    std::string summary_out, csv_out;
    random_coloring->add_option("file", input, "Wiring or lines file")->required();
    random_coloring->add_option("--trials", mc.trials, "Number of trials")->check(CLI::PositiveNumber);
    random_coloring->add_option("--seed", mc.seed, "Seed");
    random_coloring->add_option("--w", mc.w, "Tunnel width (default 6*ceil(log2 n)+3)");
    random_coloring->add_option("--threads", mc.threads, "Worker threads")->check(CLI::PositiveNumber);
    random_coloring->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
    random_coloring->add_option("--csv", csv_out, "Write the table here instead of standard output");
    random_coloring->add_option("--summary", summary_out, "Write the summary here (default: standard error)");

    // render
    auto* render = app.add_subcommand("render", "SVG of the wiring or tunnel diagram");
    std::string mode = "wiring", path_file;
    arr_render_options ro{0, 0, 0, 0, 0, nullptr, 0};
    bool colored = false;
    render->add_option("file", input, "Wiring or lines file")->required();
    render->add_option("--mode", mode, "wiring or tunnel")->check(CLI::IsMember({"wiring", "tunnel"}));
    render->add_option("--w", ro.w, "Tunnel width");
    render->add_option("--offset", ro.offset, "Tunnel offset");
    render->add_option("--width", ro.width, "Width in px");
    render->add_option("--height", ro.height, "Height in px");
    render->add_option("--path", path_file, "Path file to overlay");
    render->add_option("--coloring", coloring, "Letters R/B per pseudoline");
    render->add_flag("--colored", colored, "Use the coloring stored in the file");
    render->add_option("-o,--output", output, "Output file");

    // verify-path
    auto* verify = app.add_subcommand("verify-path", "Check a path file against an arrangement");
    verify->add_option("file", input, "Wiring or lines file")->required();
    verify->add_option("path", path_file, "Path file")->required();
    verify->add_flag("--alternating", alternating, "Also check alternation");
    verify->add_option("--coloring", coloring, "Letters R/B per pseudoline");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ARR_USAGE;
    }

    try {
        if (gen->parsed()) {
            arr_arrangement* raw = nullptr;
            if (gen_polygon->parsed()) {
                check(arr_gen_polygon(gen_k, &raw));
            } else if (gen_thm2->parsed()) {
                arr_string* checks = nullptr;
                status = check(arr_gen_theorem2(gen_k, &raw, &checks), true);
                Str c(checks);
                std::cerr << text(c);
                if (status != ARR_OK && !raw) throw Failure{status, arr_last_error()};
            } else {
                check(arr_gen_random(gen_n, gen_seed, &raw));
            }
            Arrangement a(raw);
            arr_string* w = nullptr;
            check(arr_to_wiring(a.get(), &w));
            write_out(gen_out, text(Str(w)));
        } else if (from_lines->parsed()) {
            const std::string content = read_file(input);
            arr_arrangement* raw = nullptr;
            check(arr_load_lines(content.c_str(), &raw));
            Arrangement a(raw);
            arr_string* w = nullptr;
            check(arr_to_wiring(a.get(), &w));
            write_out(output, text(Str(w)));
        } else if (stats->parsed()) {
            Arrangement a = load(input, true);
            arr_string* out = nullptr;
            check(arr_stats(a.get(), format == "json", &out));
            std::cout << text(Str(out));
        } else if (longpath->parsed()) {
            Arrangement a = load(input);
            const std::vector<int> chosen = subset.empty() ? std::vector<int>{} : parse_subset(subset);
            arr_string *report = nullptr, *path = nullptr;
            status = check(arr_longpath(a.get(), audit, chosen.data(), chosen.size(), &report, &path), true);
            Str r(report), p(path);
            if (!r) throw Failure{status, arr_last_error()};
            std::cout << text(r);
            if (!path_out.empty()) write_out(path_out, text(p));
            if (!svg_out.empty()) {
                const std::string path_text = text(p);
                arr_render_options opt{1, 2, 1, 0, 0, path_text.c_str(), 0};
                arr_string* svg = nullptr;
                check(arr_render(a.get(), &opt, &svg));
                write_out(svg_out, text(Str(svg)));
            }
            if (status != ARR_OK) std::cerr << "error: " << arr_last_error() << '\n';
        } else if (brute->parsed()) {
            Arrangement a = load(input);
            apply_coloring(a, coloring);
            search.alternating = alternating ? 1 : 0;
            arr_string *report = nullptr, *path = nullptr;
            status = check(arr_brute(a.get(), &search, &report, &path), true);
            Str r(report), p(path);
            if (!r) throw Failure{status, arr_last_error()};
            std::cout << text(r);
            if (!path_out.empty()) write_out(path_out, text(p));
            if (status != ARR_OK) std::cerr << "error: " << arr_last_error() << '\n';
        } else if (reach->parsed()) {
            Arrangement a = load(input);
            apply_coloring(a, coloring);
            arr_string* out = nullptr;
            check(arr_reach(a.get(), face, check_boundary, &out));
            std::cout << text(Str(out));
        } else if (random_coloring->parsed()) {
            Arrangement a = load(input);
            mc.json = format == "json" ? 1 : 0;
            arr_string *table = nullptr, *summary = nullptr;
            check(arr_random_coloring(a.get(), &mc, &table, &summary));
            Str t(table), s(summary);
            write_out(csv_out, text(t));
            if (summary_out.empty())
                std::cerr << text(s);
            else
                write_out(summary_out, text(s));
        } else if (render->parsed()) {
            Arrangement a = load(input, true);
            apply_coloring(a, coloring);
            const std::string path_text = path_file.empty() ? "" : read_file(path_file);
            ro.tunnel_mode = mode == "tunnel";
            ro.path = path_file.empty() ? nullptr : path_text.c_str();
            ro.use_coloring = colored || !coloring.empty();
            arr_string* svg = nullptr;
            check(arr_render(a.get(), &ro, &svg));
            write_out(output, text(Str(svg)));
        } else if (verify->parsed()) {
            Arrangement a = load(input);
            apply_coloring(a, coloring);
            const std::string path_text = read_file(path_file);
            arr_string* report = nullptr;
            status = check(arr_verify_path(a.get(), path_text.c_str(), alternating, &report), true);
            Str r(report);
            if (!r) throw Failure{status, arr_last_error()};
            std::cout << text(r);
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return status;
}
