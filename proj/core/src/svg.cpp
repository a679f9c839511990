#include "odg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace odg::io {

namespace {

// six distinguishable fills, then greys for overflow colors
const char * const kPalette[6] = {"#e41a1c", "#377eb8", "#4daf4a",
                                  "#ff7f00", "#984ea3", "#00ced1"};

std::string fill_for(int color)
{
    if (color < 6)
        return kPalette[color];
    int grey = 64 + 32 * ((color - 6) % 5);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", grey, grey, grey);
    return buf;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string render_svg(const geom::OddGraph & g, const chroma::Coloring * coloring,
                       const SvgOptions & opts)
{
    if (g.size() == 0)
        throw std::invalid_argument("render_svg: empty graph");
    int k = 0;
    if (coloring != nullptr) {
        k = coloring->empty() ? 0 : *std::max_element(coloring->begin(), coloring->end()) + 1;
        if (!chroma::validate(g, *coloring, std::max(k, 1)))
            throw std::invalid_argument("render_svg: coloring does not properly color the graph");
    }

    std::vector<std::pair<double, double>> pos;
    pos.reserve(static_cast<std::size_t>(g.size()));
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const geom::Point & p : g.vertices()) {
        double x = p.x.to_double() * opts.unit_px;
        double y = -p.y.to_double() * opts.unit_px; // svg y grows downward
        pos.emplace_back(x, y);
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    double pad = 3.0 * opts.vertex_radius_px + 2.0;
    double width = max_x - min_x + 2 * pad, height = max_y - min_y + 2 * pad;
    auto X = [&](int i) { return pos[static_cast<std::size_t>(i)].first - min_x + pad; };
    auto Y = [&](int i) { return pos[static_cast<std::size_t>(i)].second - min_y + pad; };

    std::vector<bool> big(static_cast<std::size_t>(g.size()), false);
    for (int i : opts.emphasized) {
        if (i < 0 || i >= g.size())
            throw std::out_of_range("render_svg: emphasized index out of range");
        big[static_cast<std::size_t>(i)] = true;
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    svg << "<g stroke=\"#555555\" stroke-width=\"1\">\n";
    for (const geom::Edge & e : g.detect_edges()) {
        if (opts.edge_lengths && opts.edge_lengths->count(e.len) == 0)
            continue;
        svg << "<line x1=\"" << fmt(X(e.u)) << "\" y1=\"" << fmt(Y(e.u)) << "\" x2=\""
            << fmt(X(e.v)) << "\" y2=\"" << fmt(Y(e.v)) << "\"/>\n";
    }
    svg << "</g>\n<g stroke=\"#000000\" stroke-width=\"0.75\">\n";
    for (int i = 0; i < g.size(); ++i) {
        std::string fill = coloring != nullptr
                               ? fill_for((*coloring)[static_cast<std::size_t>(i)])
                               : std::string("#cccccc");
        double r = big[static_cast<std::size_t>(i)] ? 1.8 * opts.vertex_radius_px
                                                    : opts.vertex_radius_px;
        svg << "<circle cx=\"" << fmt(X(i)) << "\" cy=\"" << fmt(Y(i)) << "\" r=\"" << fmt(r)
            << "\" fill=\"" << fill << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace odg::io
