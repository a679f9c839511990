#pragma once

#include "odg/cnf.hpp"
#include "odg/sat.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace odg::chroma {

enum class OutcomeKind { sat, unsat, indet };

/// Result of any solver run. Indeterminate outcomes (timeouts, exhausted
/// budgets) are first-class data, never exceptions.
struct SolveOutcome {
    OutcomeKind kind = OutcomeKind::indet;
    std::vector<signed char> model; // 1-based truth values when sat
    std::string indet_reason;

    bool is_sat() const { return kind == OutcomeKind::sat; }
    bool is_unsat() const { return kind == OutcomeKind::unsat; }
    bool is_indet() const { return kind == OutcomeKind::indet; }

    static SolveOutcome sat(std::vector<signed char> m)
    {
        return SolveOutcome{OutcomeKind::sat, std::move(m), {}};
    }
    static SolveOutcome unsat() { return SolveOutcome{OutcomeKind::unsat, {}, {}}; }
    static SolveOutcome indet(std::string reason)
    {
        return SolveOutcome{OutcomeKind::indet, {}, std::move(reason)};
    }
};

/// Raised when a request exceeds the internal solver's configured size
/// limit; callers should route the instance to an external solver instead.
class LimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an external solver's output cannot be interpreted. Distinct
/// from an indeterminate outcome on purpose.
class SolverOutputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Internal CDCL run over a CNF instance.
SolveOutcome solve_internal(const CnfInstance & inst, const sat::SatBudget & budget = {});

/// Exact k-colorability decision for a graph by saturation-degree
/// branch and bound; the model (when sat) uses the instance variable
/// numbering so decode() applies. node_budget < 0 means unlimited.
SolveOutcome solve_internal(const geom::OddGraph & g, int k, long long node_budget = -1);

/// Decision on an explicit edge list.
SolveOutcome decide_colorable(int n_vertices, const std::vector<std::pair<int, int>> & edges,
                              int k, long long node_budget = -1);

inline constexpr int kDefaultInternalVertexLimit = 64;

struct ChiResult {
    int chi = 0;
    Coloring witness;
};

/// Least k with a proper k-coloring, with a witness. Refuses graphs above
/// the vertex limit (LimitExceeded): use the external path for those.
ChiResult chi_exact(const geom::OddGraph & g, int vertex_limit = kDefaultInternalVertexLimit);
ChiResult chi_exact(int n_vertices, const std::vector<std::pair<int, int>> & edges);

/// Default ceiling on solver runs: a day, after which a run is declared
/// indeterminate rather than left hanging.
inline constexpr double kMaxSolverTimeoutSeconds = 86400.0;

struct ExternalSolve {
    SolveOutcome outcome;
    double wall_seconds = 0.0;
    std::string proof_file; // set when the command had a {proof} placeholder
    std::string command;    // the expanded command that ran
};

/// Writes DIMACS, runs `command` ("{cnf}" replaced by the file path,
/// optional "{proof}" by a proof output path), and parses the verdict:
/// "s SATISFIABLE" / "s UNSATISFIABLE" lines with "v" model lines, or
/// exit codes 10/20. Timeouts come back as indet("timeout"); output that
/// parses as neither verdict raises SolverOutputError. When work_dir is
/// empty a private temp dir is used and cleaned up (unless a proof was
/// requested).
ExternalSolve solve_external(const CnfInstance & inst, const std::string & command,
                             double timeout_seconds = kMaxSolverTimeoutSeconds,
                             const std::string & work_dir = "");

/// Solver callables, so reductions and pair queries can run against the
/// internal engine, an external command, or a test stub interchangeably.
using CnfSolveFn = std::function<SolveOutcome(const CnfInstance &)>;
using GraphSolveFn = std::function<SolveOutcome(const geom::OddGraph &, int)>;

CnfSolveFn internal_cnf_solver(const sat::SatBudget & budget = {});
CnfSolveFn external_cnf_solver(std::string command, double timeout_seconds);
GraphSolveFn internal_graph_solver(long long node_budget = -1);
GraphSolveFn external_graph_solver(std::string command, double timeout_seconds);

enum class PairStatus {
    always_distinct, // the pair is a virtual edge: no k-coloring unifies it
    can_coincide,    // some k-coloring gives both vertices one color
    base_unsat,      // the graph is not k-colorable at all
    indet,
};

struct PairResult {
    PairStatus status = PairStatus::indet;
    Coloring witness; // for can_coincide: a coloring with the pair equal
};

/// Does every k-coloring separate u and v? Adds per-color equivalence
/// clauses between the two vertices and solves. Adjacent pairs are
/// trivially always-distinct.
PairResult forced_distinct(const geom::OddGraph & g, int u, int v, int k,
                           const CnfSolveFn & solver);
PairResult forced_distinct(const geom::OddGraph & g, int u, int v, int k);

} // namespace odg::chroma
