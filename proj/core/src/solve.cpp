#include "odg/solve.hpp"

#include "odg/subprocess.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace odg::chroma {

SolveOutcome solve_internal(const CnfInstance & inst, const sat::SatBudget & budget)
{
    sat::CdclSolver solver(inst.var_count);
    for (const auto & clause : inst.clauses)
        solver.add_clause(clause);
    switch (solver.solve(budget)) {
    case sat::SatResult::sat: return SolveOutcome::sat(solver.model());
    case sat::SatResult::unsat: return SolveOutcome::unsat();
    case sat::SatResult::unknown: return SolveOutcome::indet("conflict or time budget exhausted");
    }
    return SolveOutcome::indet("unreachable");
}

namespace {

// Saturation-degree backtracking search for a proper k-coloring.
class ColoringSearch {
  public:
    ColoringSearch(int n, const std::vector<std::pair<int, int>> & edges, int k,
                   long long node_budget)
        : n_(n), k_(k), budget_(node_budget), adj_(static_cast<std::size_t>(n)),
          color_(static_cast<std::size_t>(n), -1),
          forbidden_(static_cast<std::size_t>(n), 0), degree_(static_cast<std::size_t>(n), 0),
          forbid_count_(static_cast<std::size_t>(n) * 64, 0)
    {
        if (k > 63)
            throw std::invalid_argument("decide_colorable: color masks support k <= 63");
        for (auto [u, v] : edges) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
            ++degree_[static_cast<std::size_t>(u)];
            ++degree_[static_cast<std::size_t>(v)];
        }
    }

    // sat: coloring filled; unsat: none exists; indet: budget exhausted.
    OutcomeKind run()
    {
        exhausted_ = false;
        if (search(0, 1))
            return OutcomeKind::sat;
        return exhausted_ ? OutcomeKind::indet : OutcomeKind::unsat;
    }

    const Coloring & coloring() const { return color_; }

  private:
    bool search(int colored, int max_colors_in_use)
    {
        if (colored == n_)
            return true;
        if (budget_ >= 0 && ++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        int pick = -1;
        int best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0)
                continue;
            int s = std::popcount(forbidden_[static_cast<std::size_t>(v)]);
            int deg = degree_[static_cast<std::size_t>(v)];
            if (s > best_sat || (s == best_sat && deg > best_deg)) {
                best_sat = s;
                best_deg = deg;
                pick = v;
            }
        }
        // only the first unused color is tried (color symmetry)
        int color_cap = std::min(k_, max_colors_in_use + 1);
        std::uint64_t mask = forbidden_[static_cast<std::size_t>(pick)];
        for (int c = 0; c < color_cap; ++c) {
            if ((mask >> c) & 1)
                continue;
            assign(pick, c);
            if (search(colored + 1, std::max(max_colors_in_use, c + 1)))
                return true;
            unassign(pick, c);
            if (exhausted_)
                return false;
        }
        return false;
    }

    void assign(int v, int c)
    {
        color_[static_cast<std::size_t>(v)] = c;
        for (int u : adj_[static_cast<std::size_t>(v)]) {
            if (color_[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (++forbid_count_[key(u, c)] == 1)
                forbidden_[static_cast<std::size_t>(u)] |= 1ull << c;
        }
    }

    void unassign(int v, int c)
    {
        color_[static_cast<std::size_t>(v)] = -1;
        for (int u : adj_[static_cast<std::size_t>(v)]) {
            if (color_[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (--forbid_count_[key(u, c)] == 0)
                forbidden_[static_cast<std::size_t>(u)] &= ~(1ull << c);
        }
    }

    static std::size_t key(int v, int c) { return static_cast<std::size_t>(v) * 64 + static_cast<std::size_t>(c); }

    int n_, k_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::vector<int>> adj_;
    Coloring color_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> degree_;
    std::vector<int> forbid_count_;
};

} // namespace

SolveOutcome decide_colorable(int n_vertices, const std::vector<std::pair<int, int>> & edges,
                              int k, long long node_budget)
{
    if (n_vertices < 1)
        throw std::invalid_argument("decide_colorable: empty graph");
    if (k < 1)
        throw std::invalid_argument("decide_colorable: need at least one color");
    ColoringSearch search(n_vertices, edges, k, node_budget);
    OutcomeKind kind = search.run();
    if (kind == OutcomeKind::sat) {
        // synthesize a model in the standard variable numbering
        CnfInstance shape;
        shape.n_vertices = n_vertices;
        shape.k = k;
        shape.var_count = n_vertices * k;
        std::vector<signed char> model(static_cast<std::size_t>(shape.var_count) + 1, 0);
        for (int v = 0; v < n_vertices; ++v)
            model[static_cast<std::size_t>(shape.var(v, search.coloring()[static_cast<std::size_t>(v)]))] = 1;
        return SolveOutcome::sat(std::move(model));
    }
    if (kind == OutcomeKind::unsat)
        return SolveOutcome::unsat();
    return SolveOutcome::indet("node budget exhausted");
}

SolveOutcome solve_internal(const geom::OddGraph & g, int k, long long node_budget)
{
    return decide_colorable(g.size(), edge_pairs(g), k, node_budget);
}

ChiResult chi_exact(int n_vertices, const std::vector<std::pair<int, int>> & edges)
{
    int lower = std::max<int>(1, static_cast<int>(greedy_clique(n_vertices, edges).size()));
    for (int k = lower;; ++k) {
        SolveOutcome outcome = decide_colorable(n_vertices, edges, k, -1);
        if (outcome.is_sat()) {
            CnfInstance shape;
            shape.n_vertices = n_vertices;
            shape.k = k;
            shape.var_count = n_vertices * k;
            return ChiResult{k, decode(shape, outcome.model)};
        }
    }
}

ChiResult chi_exact(const geom::OddGraph & g, int vertex_limit)
{
    if (g.size() > vertex_limit)
        throw LimitExceeded("chi_exact: graph has " + std::to_string(g.size()) +
                            " vertices, over the internal limit of " +
                            std::to_string(vertex_limit) + "; use an external solver");
    return chi_exact(g.size(), edge_pairs(g));
}

namespace {

std::string substitute(std::string text, const std::string & key, const std::string & value)
{
    for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at)) {
        text.replace(at, key.size(), value);
        at += value.size();
    }
    return text;
}

SolveOutcome parse_solver_output(const std::string & output, int exit_code, int var_count)
{
    std::istringstream in(output);
    std::string line;
    int verdict = 0; // 10 sat, 20 unsat, 30 unknown
    std::vector<int> lits;
    while (std::getline(in, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != std::string::npos)
                verdict = 20;
            else if (line.find("SATISFIABLE") != std::string::npos)
                verdict = 10;
            else if (line.find("UNKNOWN") != std::string::npos ||
                     line.find("INDETERMINATE") != std::string::npos)
                verdict = 30;
        } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
            std::istringstream vs(line.substr(1));
            int lit = 0;
            while (vs >> lit)
                if (lit != 0)
                    lits.push_back(lit);
        }
    }
    if (verdict == 0) {
        if (exit_code == 10)
            verdict = 10;
        else if (exit_code == 20)
            verdict = 20;
    }
    if (verdict == 20)
        return SolveOutcome::unsat();
    if (verdict == 30)
        return SolveOutcome::indet("solver reported unknown");
    if (verdict == 10) {
        if (lits.empty())
            throw SolverOutputError("solver claimed satisfiable but printed no model");
        std::vector<signed char> model(static_cast<std::size_t>(var_count) + 1, 0);
        for (int lit : lits) {
            int v = std::abs(lit);
            if (v <= var_count)
                model[static_cast<std::size_t>(v)] = lit > 0 ? 1 : 0;
        }
        return SolveOutcome::sat(std::move(model));
    }
    throw SolverOutputError("could not interpret solver output (exit code " +
                            std::to_string(exit_code) + ")");
}

} // namespace

ExternalSolve solve_external(const CnfInstance & inst, const std::string & command,
                             double timeout_seconds, const std::string & work_dir)
{
    if (command.find("{cnf}") == std::string::npos)
        throw std::invalid_argument("solve_external: command template needs a {cnf} placeholder");

    namespace fs = std::filesystem;
    bool ephemeral = work_dir.empty();
    std::string dir = ephemeral ? make_temp_dir("odg-solve-") : work_dir;
    if (!ephemeral)
        fs::create_directories(dir);

    std::string cnf_path = dir + "/problem.cnf";
    {
        std::ofstream out(cnf_path);
        inst.write_dimacs(out);
        if (!out)
            throw std::runtime_error("solve_external: cannot write " + cnf_path);
    }

    bool wants_proof = command.find("{proof}") != std::string::npos;
    std::string proof_path = dir + "/proof.drat";
    std::string expanded = substitute(command, "{cnf}", cnf_path);
    expanded = substitute(expanded, "{proof}", proof_path);

    auto start = std::chrono::steady_clock::now();
    CommandResult run = run_command(expanded, timeout_seconds);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    ExternalSolve result;
    result.wall_seconds = elapsed.count();
    result.command = expanded;
    if (wants_proof && fs::exists(proof_path))
        result.proof_file = proof_path;

    if (run.timed_out) {
        result.outcome = SolveOutcome::indet("timeout after " +
                                             std::to_string(timeout_seconds) + "s");
    } else {
        result.outcome = parse_solver_output(run.output, run.exit_code, inst.var_count);
    }

    if (ephemeral && result.proof_file.empty()) {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    return result;
}

CnfSolveFn internal_cnf_solver(const sat::SatBudget & budget)
{
    return [budget](const CnfInstance & inst) { return solve_internal(inst, budget); };
}

CnfSolveFn external_cnf_solver(std::string command, double timeout_seconds)
{
    return [command = std::move(command), timeout_seconds](const CnfInstance & inst) {
        return solve_external(inst, command, timeout_seconds).outcome;
    };
}

GraphSolveFn internal_graph_solver(long long node_budget)
{
    return [node_budget](const geom::OddGraph & g, int k) {
        return solve_internal(g, k, node_budget);
    };
}

GraphSolveFn external_graph_solver(std::string command, double timeout_seconds)
{
    return [command = std::move(command), timeout_seconds](const geom::OddGraph & g, int k) {
        return solve_external(encode(g, k), command, timeout_seconds).outcome;
    };
}

PairResult forced_distinct(const geom::OddGraph & g, int u, int v, int k,
                           const CnfSolveFn & solver)
{
    if (u == v || u < 0 || v < 0 || u >= g.size() || v >= g.size())
        throw std::invalid_argument("forced_distinct: bad vertex pair");
    auto edges = edge_pairs(g);
    for (auto [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u))
            return PairResult{PairStatus::always_distinct, {}};

    CnfInstance inst = encode(g.size(), edges, k);
    CnfInstance augmented = inst;
    for (int c = 0; c < k; ++c) {
        augmented.clauses.push_back({-augmented.var(u, c), augmented.var(v, c)});
        augmented.clauses.push_back({augmented.var(u, c), -augmented.var(v, c)});
    }

    SolveOutcome same = solver(augmented);
    if (same.is_sat())
        return PairResult{PairStatus::can_coincide, decode(inst, same.model)};
    if (same.is_indet())
        return PairResult{PairStatus::indet, {}};

    SolveOutcome base = solver(inst);
    if (base.is_sat())
        return PairResult{PairStatus::always_distinct, {}};
    if (base.is_unsat())
        return PairResult{PairStatus::base_unsat, {}};
    return PairResult{PairStatus::indet, {}};
}

PairResult forced_distinct(const geom::OddGraph & g, int u, int v, int k)
{
    return forced_distinct(g, u, v, k, internal_cnf_solver());
}

} // namespace odg::chroma
