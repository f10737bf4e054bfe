#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dualpath {

enum class Color : std::uint8_t { Red, Blue };

using ColorVector = std::vector<Color>;

/// Combinatorial encoding of a pseudoline arrangement as a sequence of
/// adjacent transpositions. Gap g (1-based) swaps the wires currently at
/// heights g and g+1. Pseudoline i is the wire at height i+1 on the far left.
struct WiringDiagram {
    int n = 0;
    std::vector<int> crossings;

    bool operator==(const WiringDiagram&) const = default;

    std::size_t full_length() const { return static_cast<std::size_t>(n) * (n - 1) / 2; }
    bool is_full() const { return crossings.size() == full_length(); }
};

/// Checks the reduced-word invariants. Throws MalformedDiagram.
/// With `permissive`, fewer than n(n-1)/2 crossings are accepted.
void validate(const WiringDiagram& d, bool permissive = false);

/// A diagram together with the optional per-pseudoline coloring trailer.
struct WiringFile {
    WiringDiagram diagram;
    std::optional<ColorVector> colors;
};

/// Parses the `wiring <n>` text format. Lines starting with '#' are ignored.
WiringFile parse_wiring(std::string_view text, bool permissive = false);

/// Emits the text format; a `colors:` trailer is written when colors are given.
std::string format_wiring(const WiringDiagram& d, const ColorVector* colors = nullptr);

ColorVector parse_colors(std::string_view letters);
std::string format_colors(const ColorVector& colors);

}  // namespace dualpath
