#pragma once

#include "odg/builders.hpp"
#include "odg/solve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace odg::reduce {

using geom::OddGraph;
using geom::Point;
using geom::Rotation;

enum class VertexOrder {
    farthest_first,
    min_degree_first,
    farthest_then_min_degree,
    min_degree_then_farthest,
};

/// How a reduction walks the vertices: which colors to keep unsatisfiable,
/// in what order vertices are tried, when to stop. Ties after the chosen
/// criteria break by exact norm, then canonical order.
struct ReductionPlan {
    int k = 5;
    VertexOrder order = VertexOrder::farthest_first;
    double step_timeout_seconds = 3600.0; // honored by solver construction
    std::optional<int> target_size;
    std::optional<int> max_steps;

    void validate() const;
};

struct PeelResult {
    std::vector<Point> removed;        // in removal order
    std::vector<OddGraph> trajectory;  // graph after each removal
    const OddGraph & final_graph() const { return trajectory.back(); }
};

/// Structural peeling: repeatedly removes the worst vertex under the
/// plan's criterion. No solver involved.
PeelResult peel(const OddGraph & g, const ReductionPlan & plan);

enum class StepOutcome { deleted, kept_sat, kept_indet };

struct MinimizeStep {
    Point vertex;
    StepOutcome outcome = StepOutcome::kept_sat;
    double seconds = 0.0;
};

struct MinimizeResult {
    OddGraph graph;
    std::vector<MinimizeStep> log;
};

/// Deletion-based minimization under k-UNSAT: every vertex is tried once
/// in criterion order; a deletion survives only when the remaining graph
/// stays k-UNSAT. Sat and indeterminate checks both restore the vertex,
/// so an overloaded solver can never cost soundness. Refuses (throws
/// std::invalid_argument / std::runtime_error) unless the input itself
/// checks k-UNSAT.
MinimizeResult minimize_unsat(const OddGraph & g, int k, const ReductionPlan & plan,
                              const chroma::GraphSolveFn & solver);

/// Core files: one surviving 1-based clause index per line (the output
/// format of proof trimmers).
std::vector<int> read_core_file(const std::string & path);

/// Maps surviving clause indices back to the vertices they mention.
std::vector<int> core_vertices_from_proof(const chroma::CnfInstance & inst,
                                          const std::vector<int> & core_clause_indices);

struct RotorGroup {
    int frame_vertex = -1;           // index into the graph
    Point frame_point;
    std::vector<int> members;        // vertex indices, frame vertex included
    std::vector<Point> local;        // unrotated rotor-local points, origin included
};

/// A graph split into its lattice-embeddable pieces: the core (rotation-free
/// coordinates), one group per rotor copy, the frame they share, and the
/// edges that genuinely cross the rotation (difference neither a lattice
/// vector nor a rotated lattice vector).
struct Decomposition {
    std::vector<int> core;
    std::vector<Point> core_points;
    std::vector<RotorGroup> rotors;
    std::vector<int> frame;
    std::vector<geom::Edge> rotation_edges;
    int rotation_core_rotor = 0;
    int rotation_rotor_rotor = 0;
    std::map<long long, int> lattice_histogram; // non-rotation edges by length
};

class DecomposeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Splits a graph built with a single rotation class. Vertices that fit
/// neither the core nor any rotor group raise DecomposeError.
Decomposition decompose(const OddGraph & g, const Rotation & rho,
                        const Rational & scale = Rational(1));

/// Rebuilds the graph from its decomposition; equals the original by
/// construction when decompose succeeded.
OddGraph reassemble(const Decomposition & d, const Rotation & rho,
                    const std::optional<std::set<long long>> & allowed_lengths = std::nullopt);

/// True when the four points form a rhombus with the given side length:
/// {p, p+u, p+v, p+u+v} with |u| = |v| = side.
bool is_rhombus(const std::array<Point, 4> & pts, long long side);

/// Candidate rotor deletions for the further-reduction step: diagonal
/// pairs (2), single rhombi (4) and disjoint rhombus pairs (8), all among
/// rotor vertices outside m2 H, deterministic order.
std::vector<std::vector<Point>> rotor_deletion_candidates(long long m2, long long n2);

struct DeletionSearchBudget {
    chroma::GraphSolveFn solver; // decides k-UNSAT per candidate
    int k = 5;
    std::size_t max_candidates = static_cast<std::size_t>(-1);
};

/// Tries candidates largest-first and returns those whose reduced graph
/// verifies k-UNSAT within the budget. An empty result under a small
/// budget is a legitimate outcome.
std::vector<std::vector<Point>> search_rotor_deletions(const build::ConstructionParams & params,
                                                       const DeletionSearchBudget & budget);

} // namespace odg::reduce
