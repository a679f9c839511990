#pragma once

#include "odg/cnf.hpp"
#include "odg/graph.hpp"

#include <string>
#include <vector>

namespace odg::io {

/// Graph file payload. Vertices serialize as coefficient quadruples
/// [a, b, c, e] per coordinate (strings "p" or "p/q"), with the graph's d
/// alongside; edges are never stored, always recomputed.
struct GraphFile {
    geom::OddGraph graph;
    std::vector<std::string> names; // optional vertex labels, canonical order
};

std::string graph_to_json(const geom::OddGraph & g,
                          const std::vector<std::string> & names = {});
GraphFile graph_from_json(const std::string & text);

void write_graph(const geom::OddGraph & g, const std::string & path,
                 const std::vector<std::string> & names = {});
GraphFile read_graph(const std::string & path);

/// Coloring file: {"k": k, "colors": [c0, c1, ...]} over canonical order.
struct ColoringFile {
    int k = 0;
    chroma::Coloring colors;
};

std::string coloring_to_json(const ColoringFile & c);
ColoringFile coloring_from_json(const std::string & text);
void write_coloring(const ColoringFile & c, const std::string & path);
ColoringFile read_coloring(const std::string & path);

/// One record per solver-invoking command: what ran, against what, with
/// which solver and budget, and how it ended.
struct RunManifest {
    std::string command;
    std::string parameters;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string solver; // "internal" or the external command template
    double timeout_seconds = -1;
    std::string outcome;
    double wall_seconds = 0;
};

std::string manifest_to_json(const RunManifest & m);
void write_manifest(const RunManifest & m, const std::string & path);

} // namespace odg::io
