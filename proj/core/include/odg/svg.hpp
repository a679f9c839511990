#pragma once

#include "odg/cnf.hpp"
#include "odg/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace odg::io {

struct SvgOptions {
    /// Draw only edges of these lengths (all detected edges when unset).
    std::optional<std::set<long long>> edge_lengths;
    /// Vertex indices drawn with a larger marker.
    std::vector<int> emphasized;
    double unit_px = 24.0;
    double vertex_radius_px = 5.0;
};

/// Deterministic SVG rendering: vertices as filled circles (colored by a
/// fixed palette when a coloring is given), edges as lines. Coordinates are
/// floating point here and only here; every predicate stays exact.
/// An invalid coloring is refused (std::invalid_argument).
std::string render_svg(const geom::OddGraph & g, const chroma::Coloring * coloring,
                       const SvgOptions & opts = {});

} // namespace odg::io
