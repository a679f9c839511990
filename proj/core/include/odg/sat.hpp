#pragma once

#include <cstdint>
#include <vector>

namespace odg::sat {

enum class SatResult { sat, unsat, unknown };

struct SatBudget {
    long long max_conflicts = -1; // < 0: unlimited
    double max_seconds = -1;      // < 0: unlimited
};

/// Conflict-driven clause-learning solver over DIMACS-style literals.
/// Deterministic: no randomization anywhere, so reruns reproduce results.
/// Meant for the desk-scale instances this project generates; plug a
/// production solver through the external command bridge for anything
/// heavier.
class CdclSolver {
  public:
    explicit CdclSolver(int var_count);

    /// DIMACS literals (no trailing 0). Tautologies are dropped and
    /// duplicate literals merged.
    void add_clause(const std::vector<int> & lits);

    SatResult solve(const SatBudget & budget = {});

    /// After sat: 1-based truth values (0/1) for every variable.
    const std::vector<signed char> & model() const { return model_; }

    long long conflicts() const { return conflicts_; }

  private:
    struct Clause {
        std::vector<int> lits; // DIMACS literals
        bool learnt = false;
    };

    static int index_of(int lit) { return 2 * std::abs(lit) + (lit < 0 ? 1 : 0); }

    signed char value(int lit) const
    {
        signed char a = assigns_[static_cast<std::size_t>(std::abs(lit))];
        if (a < 0)
            return -1;
        return (lit > 0) == (a == 1) ? 1 : 0;
    }
    bool enqueue(int lit, int reason);
    int propagate();
    void analyze(int conflict, std::vector<int> & learnt, int & backtrack_level);
    void backtrack(int level);
    void check_model() const;
    int pick_branch_var();
    void bump(int var);
    void decay() { var_inc_ /= 0.95; }
    void attach(int cref);

    int nvars_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_; // per literal index
    std::vector<signed char> assigns_;      // per var: -1 / 0 / 1
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    std::vector<signed char> polarity_;
    std::vector<int> heap_;     // max-heap of vars by activity
    std::vector<int> heap_pos_; // var -> heap slot, -1 if absent
    double var_inc_ = 1.0;
    bool contradiction_ = false;
    long long conflicts_ = 0;
    std::vector<signed char> model_;
    std::vector<signed char> seen_;

    void heap_insert(int var);
    void heap_sift_up(std::size_t i);
    void heap_sift_down(std::size_t i);
    int heap_pop();
    bool heap_less(int a, int b) const;
};

} // namespace odg::sat
