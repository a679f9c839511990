#pragma once

#include "odg/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace odg::chroma {

/// vertex -> color map over the canonical vertex order.
using Coloring = std::vector<int>;

struct EncodeOptions {
    /// Add pairwise at-most-one-color clauses per vertex. Off by default:
    /// the plain encoding plus lowest-true decoding is enough.
    bool amo = false;
    /// Pin the colors of one greedily found clique (symmetry breaking).
    /// Off by default so certificates stay reproducible across options.
    bool clique_break = false;
};

/// A k-coloring CNF. Variable numbering is fixed: vertex v (0-based,
/// canonical order) with color c (0-based) gets variable v*k + c + 1.
/// Clause order is fixed too: one at-least-one clause per vertex, then k
/// clauses per edge (edges in canonical order, colors ascending), then the
/// optional at-most-one pairs, then the optional clique-pinning units.
struct CnfInstance {
    int n_vertices = 0;
    int k = 0;
    int var_count = 0;
    std::vector<std::vector<int>> clauses;

    int var(int vertex, int color) const { return vertex * k + color + 1; }
    int vertex_of_var(int variable) const { return (variable - 1) / k; }
    int color_of_var(int variable) const { return (variable - 1) % k; }

    /// DIMACS text, bit-exact: "p cnf <vars> <clauses>" header, one
    /// space-separated zero-terminated clause per line.
    void write_dimacs(std::ostream & os) const;
    std::string dimacs() const;
};

/// Abstract-graph encoder; vertices 0..n-1, edges as index pairs.
CnfInstance encode(int n_vertices, const std::vector<std::pair<int, int>> & edges, int k,
                   const EncodeOptions & opts = {});
CnfInstance encode(const geom::OddGraph & g, int k, const EncodeOptions & opts = {});

/// Edge index pairs of a graph (detected, deduplicated).
std::vector<std::pair<int, int>> edge_pairs(const geom::OddGraph & g);

/// Per vertex, the lowest color whose variable is true. The model is
/// 1-based truth values; a vertex with no true color means the model does
/// not satisfy the instance and throws std::invalid_argument.
Coloring decode(const CnfInstance & inst, const std::vector<signed char> & model);

/// True when the coloring is total, in range, and no edge is monochromatic.
bool validate(int n_vertices, const std::vector<std::pair<int, int>> & edges,
              const Coloring & coloring, int k);
bool validate(const geom::OddGraph & g, const Coloring & coloring, int k);

/// Greedy clique (each step adds the highest-degree compatible vertex);
/// used for chromatic lower bounds and symmetry breaking.
std::vector<int> greedy_clique(int n_vertices, const std::vector<std::pair<int, int>> & edges);

/// Plain DIMACS reader (comments and a "p cnf" header; returns the clause
/// list). Throws std::invalid_argument on malformed input.
struct DimacsFile {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;
};
DimacsFile parse_dimacs(std::istream & in);

} // namespace odg::chroma
