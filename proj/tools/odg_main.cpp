// Command-line front end: builds the constructions, reproduces the triangle
// tables, encodes/solves/verifies colorings, runs reductions and renders
// figures. Exit codes: 0 success, 1 usage or failure, 2 refusal (size
// limits), 3 indeterminate solver outcome.

#include "odg/builders.hpp"
#include "odg/expr.hpp"
#include "odg/json_io.hpp"
#include "odg/reduce.hpp"
#include "odg/solve.hpp"
#include "odg/svg.hpp"
#include "odg/triangles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace odg;
using build::ConstructionParams;
using build::OddGraph;
using chroma::SolveOutcome;
using geom::Point;
using geom::Rotation;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefused = 2;
constexpr int kExitIndet = 3;

double env_timeout()
{
    const char * v = std::getenv("ODG_TIMEOUT_SECONDS");
    return v != nullptr ? std::stod(v) : chroma::kMaxSolverTimeoutSeconds;
}

std::string env_solver_cmd()
{
    const char * v = std::getenv("ODG_SOLVER_CMD");
    return v != nullptr ? v : "";
}

int env_internal_limit()
{
    const char * v = std::getenv("ODG_INTERNAL_LIMIT");
    return v != nullptr ? std::stoi(v) : chroma::kDefaultInternalVertexLimit;
}

std::string read_stream(std::istream & in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OddGraph load_graph(const std::string & path)
{
    if (path == "-")
        return io::graph_from_json(read_stream(std::cin)).graph;
    return io::read_graph(path).graph;
}

void emit(const std::string & text, const std::string & path)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw std::runtime_error("cannot write " + path);
}

/// Options shared by every solver-invoking subcommand.
struct SolverOpts {
    bool internal = false;
    std::string command = env_solver_cmd();
    double timeout = env_timeout();
    long long max_conflicts = -1;
    std::string manifest_path = "odg-manifest.json";

    void attach(CLI::App * cmd)
    {
        cmd->add_flag("--internal", internal, "use the built-in solver");
        cmd->add_option("--solver-cmd", command,
                        "external solver command with a {cnf} placeholder "
                        "(default: $ODG_SOLVER_CMD)");
        cmd->add_option("--timeout", timeout,
                        "seconds before a run counts as indeterminate "
                        "(default: $ODG_TIMEOUT_SECONDS or 86400)");
        cmd->add_option("--max-conflicts", max_conflicts,
                        "internal solver conflict budget (-1: unlimited)");
        cmd->add_option("--manifest", manifest_path, "manifest output path");
    }

    bool use_internal() const { return internal || command.empty(); }

    chroma::CnfSolveFn cnf_solver() const
    {
        if (use_internal())
            return chroma::internal_cnf_solver({max_conflicts, timeout});
        return chroma::external_cnf_solver(command, timeout);
    }

    chroma::GraphSolveFn graph_solver() const
    {
        if (use_internal()) {
            sat::SatBudget budget{max_conflicts, timeout};
            return [budget](const OddGraph & g, int k) {
                return chroma::solve_internal(chroma::encode(g, k), budget);
            };
        }
        return chroma::external_graph_solver(command, timeout);
    }

    std::string describe() const { return use_internal() ? "internal" : command; }
};

std::string outcome_str(const SolveOutcome & o)
{
    switch (o.kind) {
    case chroma::OutcomeKind::sat: return "sat";
    case chroma::OutcomeKind::unsat: return "unsat";
    case chroma::OutcomeKind::indet: return "indet: " + o.indet_reason;
    }
    return "?";
}

struct ManifestScope {
    io::RunManifest manifest;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::string path;

    ManifestScope(std::string command, std::string path_in)
        : path(std::move(path_in))
    {
        manifest.command = std::move(command);
    }
    void finish(const std::string & outcome)
    {
        manifest.outcome = outcome;
        manifest.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!path.empty())
            io::write_manifest(manifest, path);
    }
};

int exit_code_for(const SolveOutcome & o)
{
    return o.is_indet() ? kExitIndet : kExitOk;
}

// ---- build ---------------------------------------------------------------

struct BuildArgs {
    std::string expr;
    std::string name;
    long long m1 = 8, n1 = 3, m2 = 8, n2 = 3, r = 7, a = 1;
    long long m = 8, n = 3;
    std::string radius = "1";
    bool permissive = false;
    bool allow_inadmissible = false;
    long long pivot = -1, tip = -1, spindle_r = 7;
    std::string input = "-";
    std::string output = "-";
};

OddGraph build_named(const BuildArgs & args)
{
    ConstructionParams p{args.m1, args.n1, args.m2, args.n2, args.r, args.a};
    build::BuildOptions opts{args.permissive, args.allow_inadmissible};
    const std::string & name = args.name;
    if (name == "T")
        return build::make_t();
    if (name == "H")
        return build::make_h();
    if (name == "patch")
        return build::lattice_patch(Rational::parse(args.radius));
    if (name == "frame")
        return build::frame(args.m, args.n, args.allow_inadmissible);
    if (name == "core")
        return build::core(args.m, args.n, args.allow_inadmissible);
    if (name == "rotor")
        return build::rotor(args.m, args.n, args.allow_inadmissible);
    if (name == "g306")
        return build::g306(p, opts);
    if (name == "g279")
        return build::g279(p, opts);
    if (name == "g234")
        return build::g234(opts);
    if (name == "g48289")
        return build::g48289(args.r);
    if (name == "g2035")
        return build::g2035();
    if (name == "g49")
        return build::g49(args.m, args.n);
    if (name == "g49a")
        return build::g49a();
    if (name == "spindle") {
        OddGraph g = load_graph(args.input);
        if (args.pivot < 0 || args.tip < 0 || args.pivot >= g.size() || args.tip >= g.size())
            throw std::invalid_argument("spindle: --pivot/--tip must be vertex indices");
        return build::spindle(g, g.vertex(static_cast<int>(args.pivot)),
                              g.vertex(static_cast<int>(args.tip)), args.spindle_r);
    }
    throw std::invalid_argument("unknown construction '" + name + "'");
}

int run_build(const BuildArgs & args)
{
    if (args.expr.empty() && args.name.empty())
        throw CLI::ValidationError("build", "pass a construction via --expr or --name");
    OddGraph g = args.expr.empty()
                     ? build_named(args)
                     : build::eval_graph(args.expr, {args.allow_inadmissible});
    emit(io::graph_to_json(g), args.output);
    return kExitOk;
}

// ---- stats ---------------------------------------------------------------

int run_stats(const std::string & input)
{
    OddGraph g = load_graph(input);
    auto hist = g.edge_histogram();
    long long edge_count = 0;
    for (auto [len, count] : hist)
        edge_count += count;
    std::cout << g.size() << " vertices, " << edge_count << " edges";
    if (!hist.empty()) {
        std::cout << ";";
        for (auto [len, count] : hist)
            std::cout << " " << len << ":" << count;
    }
    std::cout << "\n";
    if (g.d() != 1)
        std::cout << "field: sqrt(3), sqrt(" << g.d() << ")\n";
    return kExitOk;
}

// ---- tables / triangles ---------------------------------------------------

int run_tables(long long n_below, long long s_max, bool as_json, const std::string & which)
{
    auto rows_json = [](const std::vector<tri::TableRow> & rows) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto & row = rows[i];
            os << (i ? ",\n " : "\n ") << "{\"m\": " << row.m << ", \"entries\": [";
            for (std::size_t j = 0; j < row.entries.size(); ++j) {
                const auto & p = row.entries[j];
                os << (j ? ", " : "") << "{\"t\": " << p.t << ", \"s\": " << p.s
                   << ", \"n_plus\": " << p.n_plus << ", \"n_minus\": " << p.n_minus
                   << ", \"min_s_achieved\": " << (p.s == tri::min_s(row.m) ? "true" : "false")
                   << "}";
            }
            os << "]}";
        }
        os << "\n]\n";
        return os.str();
    };
    if (which == "n" || which == "both") {
        auto rows = tri::table_n(n_below);
        std::cout << (as_json ? rows_json(rows) : tri::render_table_n(rows));
    }
    if (which == "s" || which == "both") {
        auto rows = tri::table_s(s_max);
        std::cout << (as_json ? rows_json(rows) : tri::render_table_s(rows));
    }
    return kExitOk;
}

int run_triangles(long long m, bool brute, long long bound)
{
    auto params = tri::enumerate(m);
    std::cout << "m = " << m << ", smallest possible s = " << tri::min_s(m) << "\n";
    for (const auto & p : params) {
        std::cout << "t = " << p.t << ": s = " << p.s << ", n = " << p.n_plus << " or "
                  << p.n_minus;
        if (p.s2)
            std::cout << ", second oblique length " << *p.s2;
        if (p.s == tri::min_s(m))
            std::cout << "  (minimum)";
        std::cout << "\n";
    }
    if (brute) {
        long long b = bound > 0 ? bound : tri::default_bound(m);
        auto pairs = tri::brute_force(m, b);
        std::cout << "scan over |n| <= " << b << ":";
        for (auto [n, s] : pairs)
            std::cout << " (" << n << ", " << s << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

// ---- encode / solve / chi / verify -----------------------------------------

int run_encode(const std::string & input, int k, bool amo, bool clique, const std::string & out)
{
    OddGraph g = load_graph(input);
    chroma::CnfInstance inst = chroma::encode(g, k, {amo, clique});
    emit(inst.dimacs(), out);
    std::cerr << "encoded " << g.size() << " vertices, k = " << k << ": " << inst.var_count
              << " vars, " << inst.clauses.size() << " clauses\n";
    return kExitOk;
}

int run_solve(const std::string & input, const std::string & cnf_path, int k,
              const SolverOpts & solver, const std::string & coloring_out)
{
    ManifestScope scope("solve", solver.manifest_path);
    scope.manifest.solver = solver.describe();
    scope.manifest.timeout_seconds = solver.timeout;

    if (!cnf_path.empty()) {
        scope.manifest.inputs = {cnf_path};
        std::ifstream in(cnf_path);
        if (!in)
            throw std::runtime_error("cannot open " + cnf_path);
        chroma::DimacsFile problem = chroma::parse_dimacs(in);
        chroma::CnfInstance inst;
        inst.var_count = problem.var_count;
        inst.clauses = std::move(problem.clauses);
        SolveOutcome outcome =
            solver.use_internal()
                ? chroma::solve_internal(inst, {solver.max_conflicts, solver.timeout})
                : chroma::solve_external(inst, solver.command, solver.timeout).outcome;
        std::cout << outcome_str(outcome) << "\n";
        scope.finish(outcome_str(outcome));
        return exit_code_for(outcome);
    }

    OddGraph g = load_graph(input);
    scope.manifest.inputs = {input};
    scope.manifest.parameters = "k=" + std::to_string(k);
    chroma::CnfInstance inst = chroma::encode(g, k);
    SolveOutcome outcome =
        solver.use_internal()
            ? chroma::solve_internal(inst, {solver.max_conflicts, solver.timeout})
            : chroma::solve_external(inst, solver.command, solver.timeout).outcome;
    std::cout << outcome_str(outcome) << "\n";
    if (outcome.is_sat()) {
        chroma::Coloring col = chroma::decode(inst, outcome.model);
        if (!chroma::validate(g, col, k))
            throw std::runtime_error("solver model does not decode to a proper coloring");
        if (!coloring_out.empty()) {
            io::write_coloring({k, col}, coloring_out);
            scope.manifest.outputs = {coloring_out};
        }
    }
    scope.finish(outcome_str(outcome));
    return exit_code_for(outcome);
}

int run_chi(const std::string & input, int limit, const SolverOpts & solver,
            const std::string & coloring_out)
{
    ManifestScope scope("chi", solver.manifest_path);
    scope.manifest.solver = "internal";
    scope.manifest.inputs = {input};
    OddGraph g = load_graph(input);
    chroma::ChiResult r = chroma::chi_exact(g, limit);
    std::cout << r.chi << "\n";
    if (!coloring_out.empty()) {
        io::write_coloring({r.chi, r.witness}, coloring_out);
        scope.manifest.outputs = {coloring_out};
    }
    scope.finish("chi=" + std::to_string(r.chi));
    return kExitOk;
}

int run_verify(const std::string & input, const std::string & coloring_path)
{
    OddGraph g = load_graph(input);
    io::ColoringFile c = io::read_coloring(coloring_path);
    bool ok = chroma::validate(g, c.colors, c.k);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? kExitOk : kExitError;
}

// ---- virtual ----------------------------------------------------------------

int run_virtual(const std::string & input, int u, int v, int k, const std::string & at_distance,
                int jobs, const SolverOpts & solver)
{
    ManifestScope scope("virtual", solver.manifest_path);
    scope.manifest.solver = solver.describe();
    scope.manifest.timeout_seconds = solver.timeout;
    scope.manifest.inputs = {input};
    OddGraph g = load_graph(input);
    chroma::CnfSolveFn fn = solver.cnf_solver();

    auto show = [](const chroma::PairResult & r) {
        switch (r.status) {
        case chroma::PairStatus::always_distinct: return "always-distinct";
        case chroma::PairStatus::can_coincide: return "can-coincide";
        case chroma::PairStatus::base_unsat: return "base-unsat";
        case chroma::PairStatus::indet: return "indet";
        }
        return "?";
    };

    if (at_distance.empty()) {
        chroma::PairResult r = chroma::forced_distinct(g, u, v, k, fn);
        std::cout << "(" << u << ", " << v << "): " << show(r) << "\n";
        scope.finish(show(r));
        return r.status == chroma::PairStatus::indet ? kExitIndet : kExitOk;
    }

    Rational dist = Rational::parse(at_distance);
    auto pairs = g.pairs_at_distance(dist);
    std::cout << pairs.size() << " pairs at distance " << dist.str() << "\n";
    scope.manifest.parameters = "k=" + std::to_string(k) + " distance=" + dist.str() +
                                " pairs=" + std::to_string(pairs.size());
    int distinct = 0, coincide = 0, indet = 0;
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
        for (;;) {
            std::size_t mine;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= pairs.size())
                    return;
                mine = next++;
            }
            auto [a, b] = pairs[mine];
            chroma::PairResult r = chroma::forced_distinct(g, a, b, k, fn);
            std::lock_guard<std::mutex> lock(mu);
            std::cout << "(" << a << ", " << b << "): " << show(r) << std::endl;
            if (r.status == chroma::PairStatus::always_distinct)
                ++distinct;
            else if (r.status == chroma::PairStatus::can_coincide)
                ++coincide;
            else
                ++indet;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t)
        pool.emplace_back(worker);
    for (auto & t : pool)
        t.join();
    std::cout << "always-distinct: " << distinct << ", can-coincide: " << coincide
              << ", indet: " << indet << "\n";
    scope.finish("distinct=" + std::to_string(distinct) + " coincide=" +
                 std::to_string(coincide) + " indet=" + std::to_string(indet));
    return indet > 0 ? kExitIndet : kExitOk;
}

// ---- reduce / decompose -----------------------------------------------------

reduce::VertexOrder order_from(const std::string & name)
{
    if (name == "farthest")
        return reduce::VertexOrder::farthest_first;
    if (name == "min-degree")
        return reduce::VertexOrder::min_degree_first;
    if (name == "farthest-min-degree")
        return reduce::VertexOrder::farthest_then_min_degree;
    if (name == "min-degree-farthest")
        return reduce::VertexOrder::min_degree_then_farthest;
    throw CLI::ValidationError("--order", "unknown vertex order '" + name + "'");
}

int run_reduce(const std::string & mode, const std::string & input, int k,
               const std::string & order, int target, int max_steps,
               const std::string & log_path, const std::string & output,
               const BuildArgs & params, std::size_t max_candidates,
               const SolverOpts & solver)
{
    reduce::ReductionPlan plan;
    plan.k = k;
    plan.order = order_from(order);
    plan.step_timeout_seconds = solver.timeout;
    if (target > 0)
        plan.target_size = target;
    if (max_steps >= 0)
        plan.max_steps = max_steps;

    std::ofstream log;
    if (!log_path.empty()) {
        log.open(log_path);
        if (!log)
            throw std::runtime_error("cannot write " + log_path);
    }

    if (mode == "peel") {
        OddGraph g = load_graph(input);
        reduce::PeelResult r = reduce::peel(g, plan);
        int step = 0;
        for (const Point & p : r.removed) {
            if (log)
                log << "{\"step\": " << ++step << ", \"removed_vertex\": [\"" << p.x.str()
                    << "\", \"" << p.y.str() << "\"], \"outcome\": \"peeled\", \"seconds\": 0}"
                    << "\n";
        }
        emit(io::graph_to_json(r.final_graph()), output);
        std::cerr << g.size() << " -> " << r.final_graph().size() << " vertices\n";
        return kExitOk;
    }

    if (mode == "minimize") {
        ManifestScope scope("reduce-minimize", solver.manifest_path);
        scope.manifest.solver = solver.describe();
        scope.manifest.timeout_seconds = solver.timeout;
        scope.manifest.inputs = {input};
        OddGraph g = load_graph(input);
        reduce::MinimizeResult r = reduce::minimize_unsat(g, k, plan, solver.graph_solver());
        int step = 0;
        for (const auto & entry : r.log) {
            const char * outcome = entry.outcome == reduce::StepOutcome::deleted ? "deleted"
                                   : entry.outcome == reduce::StepOutcome::kept_sat
                                       ? "restored-sat"
                                       : "restored-indet";
            if (log)
                log << "{\"step\": " << ++step << ", \"removed_vertex\": [\""
                    << entry.vertex.x.str() << "\", \"" << entry.vertex.y.str()
                    << "\"], \"outcome\": \"" << outcome << "\", \"seconds\": " << entry.seconds
                    << "}\n";
        }
        emit(io::graph_to_json(r.graph), output);
        std::cerr << g.size() << " -> " << r.graph.size() << " vertices (k = " << k << ")\n";
        scope.finish(std::to_string(g.size()) + "->" + std::to_string(r.graph.size()));
        return kExitOk;
    }

    if (mode == "search-deletions") {
        ManifestScope scope("reduce-search", solver.manifest_path);
        scope.manifest.solver = solver.describe();
        scope.manifest.timeout_seconds = solver.timeout;
        ConstructionParams p{params.m1, params.n1, params.m2, params.n2, params.r, params.a};
        reduce::DeletionSearchBudget budget{solver.graph_solver(), k, max_candidates};
        auto verified = reduce::search_rotor_deletions(p, budget);
        std::cout << verified.size() << " verified deletion lists\n";
        for (const auto & list : verified) {
            std::cout << "[";
            for (std::size_t i = 0; i < list.size(); ++i)
                std::cout << (i ? ", " : "") << "(" << list[i].x.str() << ", " << list[i].y.str()
                          << ")";
            std::cout << "]\n";
        }
        scope.finish(std::to_string(verified.size()) + " verified");
        return kExitOk;
    }

    throw CLI::ValidationError("--mode", "unknown reduce mode '" + mode + "'");
}

int run_core_vertices(const std::string & input, int k, const std::string & core_file)
{
    OddGraph g = load_graph(input);
    chroma::CnfInstance inst = chroma::encode(g, k);
    std::vector<int> indices = reduce::read_core_file(core_file);
    std::vector<int> vertices = reduce::core_vertices_from_proof(inst, indices);
    for (int v : vertices)
        std::cout << v << "\n";
    std::cerr << vertices.size() << " of " << g.size() << " vertices in the core\n";
    return kExitOk;
}

int run_decompose(const std::string & input, long long m1, long long m2, long long r,
                  const std::string & scale)
{
    OddGraph g = load_graph(input);
    Rotation rho = Rotation::from_triangle(m1, m2, r);
    reduce::Decomposition d = reduce::decompose(g, rho, Rational::parse(scale));
    std::cout << "core: " << d.core.size() << " vertices\n";
    std::cout << "rotors: " << d.rotors.size() << " (sizes:";
    for (const auto & grp : d.rotors)
        std::cout << " " << grp.members.size();
    std::cout << ")\n";
    std::cout << "frame: " << d.frame.size() << " vertices\n";
    std::cout << "rotation edges: " << d.rotation_edges.size() << " ("
              << d.rotation_core_rotor << " core-rotor, " << d.rotation_rotor_rotor
              << " rotor-rotor)\n";
    std::cout << "lattice edge lengths:";
    for (auto [len, count] : d.lattice_histogram)
        std::cout << " " << len << ":" << count;
    std::cout << "\n";
    OddGraph redone = reduce::reassemble(d, rho, g.allowed_lengths());
    std::cout << "reassembly " << (redone == g ? "reproduces" : "DIFFERS FROM")
              << " the input\n";
    return redone == g ? kExitOk : kExitError;
}

// ---- render -------------------------------------------------------------------

int run_render(const std::string & input, const std::string & coloring_path,
               const std::string & emphasize, bool emphasize_frame, long long m1, long long m2,
               long long r, const std::string & lengths, const std::string & output)
{
    OddGraph g = load_graph(input);
    io::SvgOptions opts;
    if (!lengths.empty()) {
        std::set<long long> set;
        std::istringstream ls(lengths);
        std::string item;
        while (std::getline(ls, item, ','))
            set.insert(std::stoll(item));
        opts.edge_lengths = std::move(set);
    }
    if (!emphasize.empty()) {
        std::istringstream ls(emphasize);
        std::string item;
        while (std::getline(ls, item, ','))
            opts.emphasized.push_back(std::stoi(item));
    }
    if (emphasize_frame) {
        reduce::Decomposition d = reduce::decompose(g, Rotation::from_triangle(m1, m2, r));
        opts.emphasized = d.frame;
    }
    std::string svg;
    if (!coloring_path.empty()) {
        io::ColoringFile c = io::read_coloring(coloring_path);
        svg = io::render_svg(g, &c.colors, opts);
    } else {
        svg = io::render_svg(g, nullptr, opts);
    }
    emit(svg, output);
    return kExitOk;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"odd-distance graph workbench"};
    app.require_subcommand(1);
    int rc = kExitOk;

    // build
    BuildArgs build_args;
    auto * cmd_build = app.add_subcommand("build", "evaluate a construction to graph JSON");
    cmd_build->add_option("-e,--expr", build_args.expr, "construction expression");
    cmd_build->add_option("--name", build_args.name,
                          "named construction (T, H, patch, frame, core, rotor, g306, g279, "
                          "g234, g48289, g2035, g49, g49a, spindle)");
    cmd_build->add_option("--m1", build_args.m1);
    cmd_build->add_option("--n1", build_args.n1);
    cmd_build->add_option("--m2", build_args.m2);
    cmd_build->add_option("--n2", build_args.n2);
    cmd_build->add_option("-r,--r", build_args.r, "rotation edge length");
    cmd_build->add_option("--a", build_args.a, "family scale");
    cmd_build->add_option("--m", build_args.m);
    cmd_build->add_option("--n", build_args.n);
    cmd_build->add_option("--radius", build_args.radius, "patch radius (rational)");
    cmd_build->add_flag("--permissive", build_args.permissive,
                        "no edge whitelist: every odd distance is an edge");
    cmd_build->add_flag("--allow-inadmissible", build_args.allow_inadmissible,
                        "skip the triangle-equation admissibility check");
    cmd_build->add_option("--pivot", build_args.pivot, "spindle pivot vertex index");
    cmd_build->add_option("--tip", build_args.tip, "spindle tip vertex index");
    cmd_build->add_option("--spindle-r", build_args.spindle_r, "spindle rotation edge length");
    cmd_build->add_option("-i,--input", build_args.input, "input graph for spindle");
    cmd_build->add_option("-o,--output", build_args.output, "output path (default stdout)");
    cmd_build->callback([&] { rc = run_build(build_args); });

    // stats
    std::string stats_input = "-";
    auto * cmd_stats = app.add_subcommand("stats", "vertex/edge counts and length histogram");
    cmd_stats->add_option("-i,--input", stats_input, "graph JSON (default stdin)");
    cmd_stats->callback([&] { rc = run_stats(stats_input); });

    // tables
    long long n_below = 100, s_max = 400;
    bool tables_json = false;
    std::string which = "both";
    auto * cmd_tables = app.add_subcommand("tables", "the lattice-triangle tables");
    cmd_tables->add_option("--n-max", n_below, "list (m, n) rows for m below this bound");
    cmd_tables->add_option("--s-max", s_max, "list (m, s) rows for m up to this bound");
    cmd_tables->add_flag("--json", tables_json);
    cmd_tables->add_option("--which", which)->check(CLI::IsMember({"both", "n", "s"}));
    cmd_tables->callback([&] { rc = run_tables(n_below, s_max, tables_json, which); });

    // triangles
    long long tri_m = 8, tri_bound = 0;
    bool tri_brute = false;
    auto * cmd_tri = app.add_subcommand("triangles", "triangle families for one base length");
    cmd_tri->add_option("--m", tri_m)->required();
    cmd_tri->add_flag("--brute-force", tri_brute, "cross-check with the quadratic scan");
    cmd_tri->add_option("--bound", tri_bound, "scan bound (default: exhaustive)");
    cmd_tri->callback([&] { rc = run_triangles(tri_m, tri_brute, tri_bound); });

    // encode
    std::string enc_input = "-", enc_output = "-";
    int enc_k = 5;
    bool enc_amo = false, enc_clique = false;
    auto * cmd_encode = app.add_subcommand("encode", "write the k-coloring CNF in DIMACS");
    cmd_encode->add_option("-i,--input", enc_input);
    cmd_encode->add_option("-k", enc_k)->required();
    cmd_encode->add_flag("--amo", enc_amo, "add at-most-one-color clauses");
    cmd_encode->add_flag("--clique-break", enc_clique, "pin one clique's colors");
    cmd_encode->add_option("-o,--output", enc_output);
    cmd_encode->callback([&] { rc = run_encode(enc_input, enc_k, enc_amo, enc_clique, enc_output); });

    // solve
    std::string solve_input = "-", solve_cnf, solve_coloring;
    int solve_k = 5;
    SolverOpts solve_opts;
    auto * cmd_solve = app.add_subcommand("solve", "run a solver on a graph or DIMACS file");
    cmd_solve->add_option("-i,--input", solve_input, "graph JSON");
    cmd_solve->add_option("--cnf", solve_cnf, "solve a DIMACS file instead of a graph");
    cmd_solve->add_option("-k", solve_k, "colors (graph mode)");
    cmd_solve->add_option("-o,--coloring-out", solve_coloring, "write the coloring on sat");
    solve_opts.attach(cmd_solve);
    cmd_solve->callback(
        [&] { rc = run_solve(solve_input, solve_cnf, solve_k, solve_opts, solve_coloring); });

    // chi
    std::string chi_input = "-", chi_coloring;
    int chi_limit = env_internal_limit();
    SolverOpts chi_opts;
    auto * cmd_chi = app.add_subcommand("chi", "exact chromatic number (internal solver)");
    cmd_chi->add_option("-i,--input", chi_input);
    cmd_chi->add_option("--limit", chi_limit, "internal vertex limit");
    cmd_chi->add_option("-o,--coloring-out", chi_coloring);
    cmd_chi->add_option("--manifest", chi_opts.manifest_path);
    cmd_chi->callback([&] { rc = run_chi(chi_input, chi_limit, chi_opts, chi_coloring); });

    // verify
    std::string ver_input = "-", ver_coloring;
    auto * cmd_verify = app.add_subcommand("verify", "check a coloring file against a graph");
    cmd_verify->add_option("-i,--input", ver_input);
    cmd_verify->add_option("-c,--coloring", ver_coloring)->required();
    cmd_verify->callback([&] { rc = run_verify(ver_input, ver_coloring); });

    // virtual
    std::string virt_input = "-", virt_distance;
    int virt_u = 0, virt_v = 1, virt_k = 4, virt_jobs = 1;
    SolverOpts virt_opts;
    auto * cmd_virtual =
        app.add_subcommand("virtual", "can a vertex pair share a color in any k-coloring?");
    cmd_virtual->add_option("-i,--input", virt_input);
    cmd_virtual->add_option("-u", virt_u);
    cmd_virtual->add_option("-v", virt_v);
    cmd_virtual->add_option("-k", virt_k)->required();
    cmd_virtual->add_option("--all-pairs-at-distance", virt_distance,
                            "run every vertex pair at this exact distance (rational)");
    cmd_virtual->add_option("--jobs", virt_jobs, "parallel solver runs for --all-pairs");
    virt_opts.attach(cmd_virtual);
    cmd_virtual->callback([&] {
        rc = run_virtual(virt_input, virt_u, virt_v, virt_k, virt_distance, virt_jobs, virt_opts);
    });

    // reduce
    std::string red_mode = "peel", red_input = "-", red_order = "farthest", red_log,
                red_output = "-", red_core_file;
    int red_k = 5, red_target = 0, red_max_steps = -1;
    std::size_t red_max_candidates = static_cast<std::size_t>(-1);
    BuildArgs red_params;
    SolverOpts red_opts;
    auto * cmd_reduce = app.add_subcommand("reduce", "peeling and UNSAT-preserving reduction");
    cmd_reduce->add_option("--mode", red_mode)
        ->check(CLI::IsMember({"peel", "minimize", "search-deletions", "core-vertices"}));
    cmd_reduce->add_option("-i,--input", red_input);
    cmd_reduce->add_option("-k", red_k, "colors to keep UNSAT");
    cmd_reduce->add_option("--order", red_order,
                           "farthest | min-degree | farthest-min-degree | min-degree-farthest");
    cmd_reduce->add_option("--target", red_target, "stop at this vertex count");
    cmd_reduce->add_option("--max-steps", red_max_steps);
    cmd_reduce->add_option("--log", red_log, "JSON-lines trajectory log");
    cmd_reduce->add_option("--core-file", red_core_file, "clause-index core file to map back");
    cmd_reduce->add_option("-o,--output", red_output);
    cmd_reduce->add_option("--m1", red_params.m1);
    cmd_reduce->add_option("--n1", red_params.n1);
    cmd_reduce->add_option("--m2", red_params.m2);
    cmd_reduce->add_option("--n2", red_params.n2);
    cmd_reduce->add_option("-r,--r", red_params.r);
    cmd_reduce->add_option("--max-candidates", red_max_candidates);
    red_opts.attach(cmd_reduce);
    cmd_reduce->callback([&] {
        if (red_mode == "core-vertices")
            rc = run_core_vertices(red_input, red_k, red_core_file);
        else
            rc = run_reduce(red_mode, red_input, red_k, red_order, red_target, red_max_steps,
                            red_log, red_output, red_params, red_max_candidates, red_opts);
    });

    // decompose
    std::string dec_input = "-", dec_scale = "1";
    long long dec_m1 = 8, dec_m2 = 8, dec_r = 7;
    auto * cmd_dec = app.add_subcommand("decompose", "split into core / rotors / frame");
    cmd_dec->add_option("-i,--input", dec_input);
    cmd_dec->add_option("--m1", dec_m1, "rotation triangle side 1");
    cmd_dec->add_option("--m2", dec_m2, "rotation triangle side 2");
    cmd_dec->add_option("-r,--r", dec_r, "rotation edge length");
    cmd_dec->add_option("--scale", dec_scale, "lattice scale of the rotor coordinates");
    cmd_dec->callback([&] { rc = run_decompose(dec_input, dec_m1, dec_m2, dec_r, dec_scale); });

    // render
    std::string ren_input = "-", ren_coloring, ren_emphasize, ren_lengths, ren_output = "-";
    bool ren_frame = false;
    long long ren_m1 = 8, ren_m2 = 8, ren_r = 7;
    auto * cmd_render = app.add_subcommand("render", "draw the graph as SVG");
    cmd_render->add_option("-i,--input", ren_input);
    cmd_render->add_option("-c,--coloring", ren_coloring);
    cmd_render->add_option("--emphasize", ren_emphasize, "comma-separated vertex indices");
    cmd_render->add_flag("--emphasize-frame", ren_frame,
                         "enlarge the frame vertices (needs --m1/--m2/-r)");
    cmd_render->add_option("--m1", ren_m1);
    cmd_render->add_option("--m2", ren_m2);
    cmd_render->add_option("-r,--r", ren_r);
    cmd_render->add_option("--edge-lengths", ren_lengths, "draw only these lengths");
    cmd_render->add_option("-o,--output", ren_output);
    cmd_render->callback([&] {
        rc = run_render(ren_input, ren_coloring, ren_emphasize, ren_frame, ren_m1, ren_m2, ren_r,
                        ren_lengths, ren_output);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return kExitError;
    } catch (const chroma::LimitExceeded & e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return rc;
}
