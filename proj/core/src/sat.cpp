#include "odg/sat.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace odg::sat {

CdclSolver::CdclSolver(int var_count) : nvars_(var_count)
{
    if (var_count < 0)
        throw std::invalid_argument("CdclSolver: negative variable count");
    std::size_t n = static_cast<std::size_t>(var_count) + 1;
    watches_.assign(2 * n + 2, {});
    assigns_.assign(n, -1);
    level_.assign(n, 0);
    reason_.assign(n, -1);
    activity_.assign(n, 0.0);
    polarity_.assign(n, 0);
    heap_pos_.assign(n, -1);
    seen_.assign(n, 0);
    for (int v = 1; v <= var_count; ++v)
        heap_insert(v);
}

void CdclSolver::add_clause(const std::vector<int> & lits)
{
    if (contradiction_)
        return;
    std::vector<int> c = lits;
    std::sort(c.begin(), c.end(), [](int a, int b) {
        return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    std::vector<int> cleaned;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::abs(c[i]) > nvars_)
            throw std::invalid_argument("add_clause: literal out of range");
        if (i + 1 < c.size() && c[i] == -c[i + 1])
            return; // tautology
        if (!cleaned.empty() && cleaned.back() == c[i])
            continue;
        cleaned.push_back(c[i]);
    }
    if (cleaned.empty()) {
        contradiction_ = true;
        return;
    }
    if (cleaned.size() == 1) {
        signed char v = value(cleaned[0]);
        if (v == 0)
            contradiction_ = true;
        else if (v < 0)
            enqueue(cleaned[0], -1);
        return;
    }
    clauses_.push_back(Clause{std::move(cleaned), false});
    attach(static_cast<int>(clauses_.size()) - 1);
}

void CdclSolver::attach(int cref)
{
    const Clause & c = clauses_[static_cast<std::size_t>(cref)];
    watches_[static_cast<std::size_t>(index_of(c.lits[0]))].push_back(cref);
    watches_[static_cast<std::size_t>(index_of(c.lits[1]))].push_back(cref);
}

bool CdclSolver::enqueue(int lit, int reason)
{
    int v = std::abs(lit);
    if (assigns_[static_cast<std::size_t>(v)] >= 0)
        return value(lit) == 1;
    assigns_[static_cast<std::size_t>(v)] = lit > 0 ? 1 : 0;
    level_[static_cast<std::size_t>(v)] = static_cast<int>(trail_lim_.size());
    reason_[static_cast<std::size_t>(v)] = reason;
    polarity_[static_cast<std::size_t>(v)] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
    return true;
}

int CdclSolver::propagate()
{
    while (qhead_ < trail_.size()) {
        int p = trail_[qhead_++];
        int np = -p;
        std::vector<int> & ws = watches_[static_cast<std::size_t>(index_of(np))];
        std::size_t j = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            int cref = ws[i];
            Clause & c = clauses_[static_cast<std::size_t>(cref)];
            if (c.lits[0] == np)
                std::swap(c.lits[0], c.lits[1]);
            // c.lits[1] == np, now false
            if (value(c.lits[0]) == 1) {
                ws[j++] = cref;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.lits.size(); ++k) {
                if (value(c.lits[k]) != 0) {
                    std::swap(c.lits[1], c.lits[k]);
                    watches_[static_cast<std::size_t>(index_of(c.lits[1]))].push_back(cref);
                    moved = true;
                    break;
                }
            }
            if (moved)
                continue;
            ws[j++] = cref;
            if (value(c.lits[0]) == 0) {
                // conflict: keep the rest of the watch list intact
                for (std::size_t k = i + 1; k < ws.size(); ++k)
                    ws[j++] = ws[k];
                ws.resize(j);
                qhead_ = trail_.size();
                return cref;
            }
            enqueue(c.lits[0], cref);
        }
        ws.resize(j);
    }
    return -1;
}

void CdclSolver::bump(int var)
{
    activity_[static_cast<std::size_t>(var)] += var_inc_;
    if (activity_[static_cast<std::size_t>(var)] > 1e100) {
        for (int v = 1; v <= nvars_; ++v)
            activity_[static_cast<std::size_t>(v)] *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[static_cast<std::size_t>(var)] >= 0)
        heap_sift_up(static_cast<std::size_t>(heap_pos_[static_cast<std::size_t>(var)]));
}

void CdclSolver::analyze(int conflict, std::vector<int> & learnt, int & backtrack_level)
{
    learnt.assign(1, 0);
    int path_count = 0;
    int p = 0;
    std::size_t index = trail_.size();
    int cref = conflict;
    int current = static_cast<int>(trail_lim_.size());

    do {
        const Clause & c = clauses_[static_cast<std::size_t>(cref)];
        for (int q : c.lits) {
            if (q == p)
                continue;
            int v = std::abs(q);
            if (seen_[static_cast<std::size_t>(v)] || level_[static_cast<std::size_t>(v)] == 0)
                continue;
            seen_[static_cast<std::size_t>(v)] = 1;
            bump(v);
            if (level_[static_cast<std::size_t>(v)] >= current)
                ++path_count;
            else
                learnt.push_back(q);
        }
        while (seen_[static_cast<std::size_t>(std::abs(trail_[index - 1]))] == 0)
            --index;
        --index;
        p = trail_[index];
        seen_[static_cast<std::size_t>(std::abs(p))] = 0;
        cref = reason_[static_cast<std::size_t>(std::abs(p))];
        --path_count;
    } while (path_count > 0);
    learnt[0] = -p;

    backtrack_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[static_cast<std::size_t>(std::abs(learnt[i]))] >
                level_[static_cast<std::size_t>(std::abs(learnt[max_i]))])
                max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        backtrack_level = level_[static_cast<std::size_t>(std::abs(learnt[1]))];
    }
    for (std::size_t i = 1; i < learnt.size(); ++i)
        seen_[static_cast<std::size_t>(std::abs(learnt[i]))] = 0;
}

void CdclSolver::backtrack(int target)
{
    if (static_cast<int>(trail_lim_.size()) <= target)
        return;
    std::size_t cut = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(target)]);
    for (std::size_t i = trail_.size(); i > cut; --i) {
        int v = std::abs(trail_[i - 1]);
        assigns_[static_cast<std::size_t>(v)] = -1;
        reason_[static_cast<std::size_t>(v)] = -1;
        if (heap_pos_[static_cast<std::size_t>(v)] < 0)
            heap_insert(v);
    }
    trail_.resize(cut);
    trail_lim_.resize(static_cast<std::size_t>(target));
    qhead_ = trail_.size();
}

bool CdclSolver::heap_less(int a, int b) const
{
    // max-heap by activity; index as a deterministic tiebreak
    double aa = activity_[static_cast<std::size_t>(a)];
    double ab = activity_[static_cast<std::size_t>(b)];
    if (aa != ab)
        return aa < ab;
    return a > b;
}

void CdclSolver::heap_insert(int var)
{
    heap_pos_[static_cast<std::size_t>(var)] = static_cast<int>(heap_.size());
    heap_.push_back(var);
    heap_sift_up(heap_.size() - 1);
}

void CdclSolver::heap_sift_up(std::size_t i)
{
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!heap_less(heap_[parent], heap_[i]))
            break;
        std::swap(heap_[parent], heap_[i]);
        heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
        heap_pos_[static_cast<std::size_t>(heap_[parent])] = static_cast<int>(parent);
        i = parent;
    }
}

void CdclSolver::heap_sift_down(std::size_t i)
{
    for (;;) {
        std::size_t l = 2 * i + 1, r = 2 * i + 2, best = i;
        if (l < heap_.size() && heap_less(heap_[best], heap_[l]))
            best = l;
        if (r < heap_.size() && heap_less(heap_[best], heap_[r]))
            best = r;
        if (best == i)
            break;
        std::swap(heap_[i], heap_[best]);
        heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
        heap_pos_[static_cast<std::size_t>(heap_[best])] = static_cast<int>(best);
        i = best;
    }
}

int CdclSolver::heap_pop()
{
    int top = heap_.front();
    heap_pos_[static_cast<std::size_t>(top)] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_pos_[static_cast<std::size_t>(heap_.front())] = 0;
        heap_sift_down(0);
    }
    return top;
}

int CdclSolver::pick_branch_var()
{
    while (!heap_.empty()) {
        int v = heap_pop();
        if (assigns_[static_cast<std::size_t>(v)] < 0)
            return v;
    }
    return 0;
}

void CdclSolver::check_model() const
{
    for (const Clause & c : clauses_) {
        if (c.learnt)
            continue;
        bool satisfied = false;
        for (int lit : c.lits) {
            signed char v = model_[static_cast<std::size_t>(std::abs(lit))];
            if ((lit > 0) == (v == 1)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            throw std::logic_error("CdclSolver: model fails an input clause");
    }
}

namespace {

// Luby restart sequence: 1 1 2 1 1 2 4 ...
long long luby(long long x)
{
    long long size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) / 2;
        --seq;
        x %= size;
    }
    return 1ll << seq;
}

} // namespace

SatResult CdclSolver::solve(const SatBudget & budget)
{
    if (contradiction_)
        return SatResult::unsat;
    auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (budget.max_seconds < 0)
            return false;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > budget.max_seconds;
    };

    long long restart_round = 0;
    long long steps = 0;
    std::vector<int> learnt;
    for (;;) {
        long long restart_budget = 128 * luby(restart_round++);
        long long restart_conflicts = 0;
        backtrack(0);
        for (;;) {
            if (((++steps) & 8191) == 0 && out_of_time())
                return SatResult::unknown;
            int conflict = propagate();
            if (conflict >= 0) {
                ++conflicts_;
                ++restart_conflicts;
                if (trail_lim_.empty())
                    return SatResult::unsat;
                int back_level = 0;
                analyze(conflict, learnt, back_level);
                backtrack(back_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    clauses_.push_back(Clause{learnt, true});
                    attach(static_cast<int>(clauses_.size()) - 1);
                    enqueue(learnt[0], static_cast<int>(clauses_.size()) - 1);
                }
                decay();
                if (budget.max_conflicts >= 0 && conflicts_ >= budget.max_conflicts)
                    return SatResult::unknown;
                if ((conflicts_ & 511) == 0 && out_of_time())
                    return SatResult::unknown;
                if (restart_conflicts >= restart_budget)
                    break; // restart
            } else {
                int v = pick_branch_var();
                if (v == 0) {
                    model_.assign(static_cast<std::size_t>(nvars_) + 1, 0);
                    for (int var = 1; var <= nvars_; ++var)
                        model_[static_cast<std::size_t>(var)] =
                            assigns_[static_cast<std::size_t>(var)] == 1 ? 1 : 0;
                    check_model();
                    return SatResult::sat;
                }
                trail_lim_.push_back(static_cast<int>(trail_.size()));
                enqueue(polarity_[static_cast<std::size_t>(v)] == 1 ? v : -v, -1);
            }
        }
    }
}

} // namespace odg::sat
