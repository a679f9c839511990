// Minimal DIMACS CNF solver front-end over the built-in CDCL engine.
// Speaks the usual protocol: "s SATISFIABLE" / "s UNSATISFIABLE" /
// "s UNKNOWN" plus "v" model lines, exit codes 10 / 20 / 0.

#include "odg/cnf.hpp"
#include "odg/sat.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int usage()
{
    std::cerr << "usage: odg-sat <file.cnf | -> [--max-conflicts N] [--time-limit SECONDS]\n";
    return 1;
}

} // namespace

int main(int argc, char ** argv)
{
    std::string path;
    odg::sat::SatBudget budget;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--max-conflicts" && i + 1 < argc)
            budget.max_conflicts = std::stoll(argv[++i]);
        else if (arg == "--time-limit" && i + 1 < argc)
            budget.max_seconds = std::stod(argv[++i]);
        else if (arg == "-h" || arg == "--help")
            return usage();
        else if (path.empty())
            path = arg;
        else
            return usage();
    }
    if (path.empty())
        return usage();

    odg::chroma::DimacsFile problem;
    try {
        if (path == "-") {
            problem = odg::chroma::parse_dimacs(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "odg-sat: cannot open " << path << "\n";
                return 1;
            }
            problem = odg::chroma::parse_dimacs(in);
        }
    } catch (const std::exception & e) {
        std::cerr << "odg-sat: " << e.what() << "\n";
        return 1;
    }

    odg::sat::CdclSolver solver(problem.var_count);
    for (const auto & clause : problem.clauses)
        solver.add_clause(clause);

    std::cout << "c odg-sat: " << problem.var_count << " vars, " << problem.clauses.size()
              << " clauses\n";
    odg::sat::SatResult result = solver.solve(budget);
    std::cout << "c conflicts: " << solver.conflicts() << "\n";

    if (result == odg::sat::SatResult::unsat) {
        std::cout << "s UNSATISFIABLE\n";
        return 20;
    }
    if (result == odg::sat::SatResult::unknown) {
        std::cout << "s UNKNOWN\n";
        return 0;
    }
    std::cout << "s SATISFIABLE\n";
    const auto & model = solver.model();
    std::cout << "v";
    int on_line = 0;
    for (int v = 1; v <= problem.var_count; ++v) {
        std::cout << " " << (model[static_cast<std::size_t>(v)] != 0 ? v : -v);
        if (++on_line == 20 && v != problem.var_count) {
            std::cout << "\nv";
            on_line = 0;
        }
    }
    std::cout << " 0\n";
    return 10;
}
