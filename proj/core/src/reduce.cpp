#include "odg/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace odg::reduce {

using odg::FieldElement;

void ReductionPlan::validate() const
{
    if (k < 1)
        throw std::invalid_argument("ReductionPlan: k must be positive");
    if (step_timeout_seconds <= 0)
        throw std::invalid_argument("ReductionPlan: step timeout must be positive");
    if (target_size && *target_size < 1)
        throw std::invalid_argument("ReductionPlan: target size must be positive");
    if (max_steps && *max_steps < 0)
        throw std::invalid_argument("ReductionPlan: negative step limit");
}

namespace {

// Worst vertex under the plan's criterion among `candidates` (indices into g).
int pick_vertex(const OddGraph & g, const std::vector<int> & candidates,
                const std::vector<int> & degrees, VertexOrder order)
{
    auto norm_cmp = [&](int a, int b) {
        // positive when |a| > |b|
        return (g.vertex(a).norm_sq() - g.vertex(b).norm_sq()).sign();
    };
    auto worse = [&](int a, int b) { // true when a should be picked before b
        int by_norm = norm_cmp(a, b); // > 0: a farther out
        int by_deg = degrees[static_cast<std::size_t>(a)] - degrees[static_cast<std::size_t>(b)];
        switch (order) {
        case VertexOrder::farthest_first:
            break;
        case VertexOrder::min_degree_first:
            if (by_deg != 0)
                return by_deg < 0;
            break;
        case VertexOrder::farthest_then_min_degree:
            if (by_norm != 0)
                return by_norm > 0;
            if (by_deg != 0)
                return by_deg < 0;
            break;
        case VertexOrder::min_degree_then_farthest:
            if (by_deg != 0)
                return by_deg < 0;
            break;
        }
        // remaining ties: exact norm first, then canonical order
        if (by_norm != 0)
            return by_norm > 0;
        return a < b;
    };
    int best = candidates.front();
    for (int v : candidates)
        if (v != best && worse(v, best))
            best = v;
    return best;
}

bool needs_degrees(VertexOrder order)
{
    return order != VertexOrder::farthest_first;
}

std::vector<int> current_degrees(const OddGraph & g, VertexOrder order)
{
    if (!needs_degrees(order))
        return std::vector<int>(static_cast<std::size_t>(g.size()), 0);
    return vertex_degrees(g, g.detect_edges());
}

} // namespace

PeelResult peel(const OddGraph & g, const ReductionPlan & plan)
{
    plan.validate();
    if (g.size() == 0)
        throw std::invalid_argument("peel: empty graph");
    PeelResult out;
    OddGraph current = g;
    int steps = 0;
    while (current.size() > 1) {
        if (plan.target_size && current.size() <= *plan.target_size)
            break;
        if (plan.max_steps && steps >= *plan.max_steps)
            break;
        std::vector<int> all(static_cast<std::size_t>(current.size()));
        for (int i = 0; i < current.size(); ++i)
            all[static_cast<std::size_t>(i)] = i;
        std::vector<int> degrees = current_degrees(current, plan.order);
        int victim = pick_vertex(current, all, degrees, plan.order);
        out.removed.push_back(current.vertex(victim));
        current = current.without_vertices({victim});
        out.trajectory.push_back(current);
        ++steps;
    }
    if (out.trajectory.empty())
        out.trajectory.push_back(current);
    return out;
}

MinimizeResult minimize_unsat(const OddGraph & g, int k, const ReductionPlan & plan,
                              const chroma::GraphSolveFn & solver)
{
    plan.validate();
    if (g.size() == 0)
        throw std::invalid_argument("minimize_unsat: empty graph");

    chroma::SolveOutcome initial = solver(g, k);
    if (initial.is_sat())
        throw std::invalid_argument("minimize_unsat: graph is " + std::to_string(k) +
                                    "-colorable, nothing to minimize");
    if (initial.is_indet())
        throw std::runtime_error("minimize_unsat: could not establish " + std::to_string(k) +
                                 "-UNSAT within budget (" + initial.indet_reason + "); refusing");

    MinimizeResult out{g, {}};
    // every original vertex gets one attempt, identified by its point
    std::vector<Point> pending = g.vertices();
    int steps = 0;
    while (!pending.empty()) {
        if (plan.max_steps && steps >= *plan.max_steps)
            break;
        if (plan.target_size && out.graph.size() <= *plan.target_size)
            break;
        if (out.graph.size() <= 1)
            break;
        // candidates still present in the current graph
        std::vector<int> candidates;
        for (const Point & p : pending)
            if (auto idx = out.graph.find(p))
                candidates.push_back(*idx);
        if (candidates.empty())
            break;
        std::vector<int> degrees = current_degrees(out.graph, plan.order);
        int victim = pick_vertex(out.graph, candidates, degrees, plan.order);
        Point victim_point = out.graph.vertex(victim);

        auto t0 = std::chrono::steady_clock::now();
        OddGraph candidate_graph = out.graph.without_vertices({victim});
        chroma::SolveOutcome outcome = solver(candidate_graph, k);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        StepOutcome step;
        if (outcome.is_unsat()) {
            out.graph = std::move(candidate_graph);
            step = StepOutcome::deleted;
        } else {
            step = outcome.is_sat() ? StepOutcome::kept_sat : StepOutcome::kept_indet;
        }
        out.log.push_back(MinimizeStep{victim_point, step, secs});
        pending.erase(std::find_if(pending.begin(), pending.end(),
                                   [&](const Point & p) { return p == victim_point; }));
        ++steps;
    }
    return out;
}

std::vector<int> read_core_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_core_file: cannot open " + path);
    std::vector<int> indices;
    long long value = 0;
    while (in >> value)
        indices.push_back(static_cast<int>(value));
    return indices;
}

std::vector<int> core_vertices_from_proof(const chroma::CnfInstance & inst,
                                          const std::vector<int> & core_clause_indices)
{
    std::vector<bool> seen(static_cast<std::size_t>(inst.n_vertices), false);
    for (int index : core_clause_indices) {
        if (index < 1 || static_cast<std::size_t>(index) > inst.clauses.size())
            throw std::out_of_range("core clause index " + std::to_string(index) +
                                    " out of range");
        for (int lit : inst.clauses[static_cast<std::size_t>(index - 1)])
            seen[static_cast<std::size_t>(inst.vertex_of_var(std::abs(lit)))] = true;
    }
    std::vector<int> vertices;
    for (int v = 0; v < inst.n_vertices; ++v)
        if (seen[static_cast<std::size_t>(v)])
            vertices.push_back(v);
    return vertices;
}

namespace {

bool in_base_field(const Point & p)
{
    return p.x.in_base_field() && p.y.in_base_field();
}

} // namespace

Decomposition decompose(const OddGraph & g, const Rotation & rho, const Rational & scale)
{
    Decomposition out;
    Rotation inv = rho.inverse();

    std::vector<int> rotated;
    for (int i = 0; i < g.size(); ++i) {
        if (in_base_field(g.vertex(i))) {
            out.core.push_back(i);
            out.core_points.push_back(g.vertex(i));
        } else {
            rotated.push_back(i);
        }
    }

    // group strictly rotated vertices by the core translate they unrotate to
    std::map<int, RotorGroup> groups; // keyed by frame vertex index
    for (int i : rotated) {
        int home = -1;
        Point local;
        for (int f : out.core) {
            Point w = inv.apply(g.vertex(i) - g.vertex(f));
            if (!in_base_field(w))
                continue;
            if (geom::lattice_coords(w, scale)) {
                if (home >= 0)
                    throw DecomposeError("vertex " + std::to_string(i) +
                                         " unrotates into several frame translates");
                home = f;
                local = w;
            }
        }
        if (home < 0)
            throw DecomposeError("vertex " + std::to_string(i) +
                                 " fits neither the core nor any rotor group");
        RotorGroup & grp = groups[home];
        if (grp.members.empty()) {
            grp.frame_vertex = home;
            grp.frame_point = g.vertex(home);
            grp.members.push_back(home);
            grp.local.push_back(geom::origin());
        }
        grp.members.push_back(i);
        grp.local.push_back(local);
    }

    for (auto & [f, grp] : groups) {
        out.frame.push_back(f);
        out.rotors.push_back(std::move(grp));
    }

    // classify edges by what their difference vector lives in
    for (const geom::Edge & e : g.detect_edges()) {
        Point w = g.vertex(e.u) - g.vertex(e.v);
        if (in_base_field(w) || in_base_field(inv.apply(w))) {
            ++out.lattice_histogram[e.len];
            continue;
        }
        out.rotation_edges.push_back(e);
        bool u_core = in_base_field(g.vertex(e.u));
        bool v_core = in_base_field(g.vertex(e.v));
        if (u_core || v_core)
            ++out.rotation_core_rotor;
        else
            ++out.rotation_rotor_rotor;
    }
    return out;
}

OddGraph reassemble(const Decomposition & d, const Rotation & rho,
                    const std::optional<std::set<long long>> & allowed_lengths)
{
    std::vector<Point> pts = d.core_points;
    for (const RotorGroup & grp : d.rotors)
        for (const Point & local : grp.local)
            pts.push_back(grp.frame_point + rho.apply(local));
    return OddGraph(std::move(pts), allowed_lengths);
}

bool is_rhombus(const std::array<Point, 4> & pts, long long side)
{
    FieldElement side_sq(Rational(side * side));
    // try each point as the base corner p with the other three as
    // p+u, p+v, p+u+v in some order
    for (int base = 0; base < 4; ++base) {
        for (int i = 0; i < 4; ++i) {
            if (i == base)
                continue;
            for (int j = i + 1; j < 4; ++j) {
                if (j == base)
                    continue;
                int k = 6 - base - i - j;
                Point u = pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(base)];
                Point v = pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(base)];
                if (!(u.norm_sq() == side_sq) || !(v.norm_sq() == side_sq))
                    continue;
                if (u == v || u == -v)
                    continue;
                if (pts[static_cast<std::size_t>(base)] + u + v == pts[static_cast<std::size_t>(k)])
                    return true;
            }
        }
    }
    return false;
}

std::vector<std::vector<Point>> rotor_deletion_candidates(long long m2, long long n2)
{
    OddGraph rot = build::rotor(m2, n2);
    OddGraph hub = build::make_h().scaled(geom::ComplexScalar::real(FieldElement(m2)));
    std::vector<Point> outer;
    for (const Point & p : rot.vertices())
        if (!hub.contains(p))
            outer.push_back(p);

    FieldElement side_sq(Rational(m2 * m2));
    auto find = [&](const Point & p) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < outer.size(); ++i)
            if (outer[i] == p)
                return i;
        return std::nullopt;
    };

    // enumerate rhombi {p, p+u, p+v, p+u+v} with side |u| = |v| = m2
    std::vector<std::array<std::size_t, 4>> rhombi;
    for (std::size_t a = 0; a < outer.size(); ++a) {
        std::vector<std::size_t> steps;
        for (std::size_t b = 0; b < outer.size(); ++b)
            if (b != a && (outer[b] - outer[a]).norm_sq() == side_sq)
                steps.push_back(b);
        for (std::size_t i = 0; i < steps.size(); ++i) {
            for (std::size_t j = i + 1; j < steps.size(); ++j) {
                Point fourth = outer[steps[i]] + (outer[steps[j]] - outer[a]);
                auto idx = find(fourth);
                if (!idx)
                    continue;
                std::array<std::size_t, 4> quad{a, steps[i], steps[j], *idx};
                std::sort(quad.begin(), quad.end());
                if (std::find(rhombi.begin(), rhombi.end(), quad) == rhombi.end())
                    rhombi.push_back(quad);
            }
        }
    }
    std::sort(rhombi.begin(), rhombi.end());

    std::vector<std::vector<Point>> candidates;
    auto emit = [&](const std::vector<std::size_t> & idx) {
        std::vector<Point> pts;
        for (std::size_t i : idx)
            pts.push_back(outer[i]);
        candidates.push_back(std::move(pts));
    };
    // disjoint rhombus pairs (8 vertices) first: the deepest reductions
    for (std::size_t i = 0; i < rhombi.size(); ++i) {
        for (std::size_t j = i + 1; j < rhombi.size(); ++j) {
            std::vector<std::size_t> merged(rhombi[i].begin(), rhombi[i].end());
            merged.insert(merged.end(), rhombi[j].begin(), rhombi[j].end());
            std::sort(merged.begin(), merged.end());
            if (std::adjacent_find(merged.begin(), merged.end()) == merged.end())
                emit(merged);
        }
    }
    for (const auto & quad : rhombi)
        emit({quad.begin(), quad.end()});
    // diagonal pairs of each rhombus
    for (const auto & quad : rhombi) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                // a diagonal pair is the two corners NOT at distance m2
                if (!((outer[quad[j]] - outer[quad[i]]).norm_sq() == side_sq)) {
                    emit({quad[i], quad[j]});
                }
            }
        }
    }
    return candidates;
}

std::vector<std::vector<Point>> search_rotor_deletions(const build::ConstructionParams & params,
                                                       const DeletionSearchBudget & budget)
{
    if (!budget.solver)
        throw std::invalid_argument("search_rotor_deletions: no solver in budget");
    std::vector<std::vector<Point>> verified;
    std::size_t tried = 0;
    for (const auto & candidate : rotor_deletion_candidates(params.m2, params.n2)) {
        if (tried++ >= budget.max_candidates)
            break;
        OddGraph g = build::g306_reduced(params, candidate);
        chroma::SolveOutcome outcome = budget.solver(g, budget.k);
        if (outcome.is_unsat())
            verified.push_back(candidate);
    }
    return verified;
}

} // namespace odg::reduce
