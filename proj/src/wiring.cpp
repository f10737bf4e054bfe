#include "dualpath/wiring.hpp"

#include "dualpath/error.hpp"

#include <charconv>
#include <sstream>

namespace dualpath {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(line);
    }
    return out;
}

int parse_int(std::string_view tok, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ValidationError(std::string("bad ") + what + ": '" + std::string(tok) + "'");
    return v;
}

}  // namespace

void validate(const WiringDiagram& d, bool permissive) {
    if (d.n < 1) throw ValidationError("wiring diagram needs n >= 1");
    std::vector<int> wire(d.n);
    for (int i = 0; i < d.n; ++i) wire[i] = i;
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        int g = d.crossings[k];
        if (g < 1 || g > d.n - 1)
            throw MalformedDiagram(k, "gap index " + std::to_string(g) + " outside [1, " + std::to_string(d.n - 1) + "]");
        // Pseudolines start in increasing order, so a pair that already swapped is inverted.
        if (wire[g - 1] > wire[g])
            throw MalformedDiagram(k, "pseudolines " + std::to_string(wire[g]) + " and " + std::to_string(wire[g - 1]) +
                                          " cross twice");
        std::swap(wire[g - 1], wire[g]);
    }
    if (!permissive && !d.is_full())
        throw ValidationError("partial arrangement: " + std::to_string(d.crossings.size()) + " of " +
                              std::to_string(d.full_length()) + " crossings");
}

ColorVector parse_colors(std::string_view letters) {
    ColorVector out;
    for (char c : letters) {
        if (c == 'R' || c == 'r')
            out.push_back(Color::Red);
        else if (c == 'B' || c == 'b')
            out.push_back(Color::Blue);
        else if (c == ' ')
            continue;
        else
            throw ValidationError(std::string("bad color letter '") + c + "'");
    }
    return out;
}

std::string format_colors(const ColorVector& colors) {
    std::string s;
    for (Color c : colors) s += c == Color::Red ? 'R' : 'B';
    return s;
}

WiringFile parse_wiring(std::string_view text, bool permissive) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ValidationError("empty wiring file");
    auto header = lines[0];
    if (header.substr(0, 7) != "wiring ") throw ValidationError("expected 'wiring <n>' header");
    WiringFile file;
    file.diagram.n = parse_int(trim(header.substr(7)), "pseudoline count");

    std::size_t next = 1;
    if (next < lines.size() && lines[next].substr(0, 7) != "colors:") {
        auto body = lines[next++];
        while (!body.empty()) {
            auto sp = body.find(' ');
            auto tok = body.substr(0, sp);
            body = sp == std::string_view::npos ? std::string_view{} : trim(body.substr(sp + 1));
            if (!tok.empty()) file.diagram.crossings.push_back(parse_int(tok, "gap index"));
        }
    }
    if (next < lines.size()) {
        if (lines[next].substr(0, 7) != "colors:") throw ValidationError("unexpected line after crossings");
        file.colors = parse_colors(trim(lines[next].substr(7)));
        if (static_cast<int>(file.colors->size()) != file.diagram.n)
            throw ValidationError("colors trailer length differs from n");
        ++next;
    }
    if (next != lines.size()) throw ValidationError("trailing content in wiring file");
    validate(file.diagram, permissive);
    return file;
}

std::string format_wiring(const WiringDiagram& d, const ColorVector* colors) {
    std::ostringstream os;
    os << "wiring " << d.n << '\n';
    for (std::size_t i = 0; i < d.crossings.size(); ++i) os << (i ? " " : "") << d.crossings[i];
    os << '\n';
    if (colors) os << "colors: " << format_colors(*colors) << '\n';
    return os.str();
}

}  // namespace dualpath
