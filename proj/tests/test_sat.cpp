#include <doctest.h>

#include "odg/sat.hpp"

#include <random>
#include <stdexcept>

using namespace odg::sat;

namespace {

// exhaustive satisfiability for small variable counts
bool satisfiable_by_enumeration(int nvars, const std::vector<std::vector<int>> & clauses)
{
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool all = true;
        for (const auto & clause : clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool val = (mask >> (std::abs(lit) - 1)) & 1u;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

} // namespace

TEST_SUITE("sat")
{
    TEST_CASE("trivial cases")
    {
        CdclSolver empty(0);
        CHECK(empty.solve() == SatResult::sat);

        CdclSolver unit(1);
        unit.add_clause({1});
        CHECK(unit.solve() == SatResult::sat);
        CHECK(unit.model()[1] == 1);

        CdclSolver clash(1);
        clash.add_clause({1});
        clash.add_clause({-1});
        CHECK(clash.solve() == SatResult::unsat);

        CdclSolver taut(2);
        taut.add_clause({1, -1}); // dropped as a tautology
        taut.add_clause({2});
        CHECK(taut.solve() == SatResult::sat);
        CHECK(taut.model()[2] == 1);

        CdclSolver empty_clause(1);
        empty_clause.add_clause({});
        CHECK(empty_clause.solve() == SatResult::unsat);

        CHECK_THROWS_AS(CdclSolver(1).add_clause({5}), std::invalid_argument);
    }

    TEST_CASE("conflict budget reports unknown")
    {
        // pigeonhole instances need many conflicts
        int holes = 5, pigeons = 6;
        CdclSolver s(pigeons * holes);
        auto var = [&](int p, int h) { return p * holes + h + 1; };
        for (int p = 0; p < pigeons; ++p) {
            std::vector<int> clause;
            for (int h = 0; h < holes; ++h)
                clause.push_back(var(p, h));
            s.add_clause(clause);
        }
        for (int h = 0; h < holes; ++h)
            for (int p1 = 0; p1 < pigeons; ++p1)
                for (int p2 = p1 + 1; p2 < pigeons; ++p2)
                    s.add_clause({-var(p1, h), -var(p2, h)});
        CHECK(s.solve({5, -1}) == SatResult::unknown);
        // and completes when given room
        CdclSolver s2(pigeons * holes);
        for (int p = 0; p < pigeons; ++p) {
            std::vector<int> clause;
            for (int h = 0; h < holes; ++h)
                clause.push_back(var(p, h));
            s2.add_clause(clause);
        }
        for (int h = 0; h < holes; ++h)
            for (int p1 = 0; p1 < pigeons; ++p1)
                for (int p2 = p1 + 1; p2 < pigeons; ++p2)
                    s2.add_clause({-var(p1, h), -var(p2, h)});
        CHECK(s2.solve() == SatResult::unsat);
    }

    TEST_CASE("random instances agree with enumeration")
    {
        std::mt19937 rng(12);
        for (int round = 0; round < 300; ++round) {
            int nvars = 3 + static_cast<int>(rng() % 10);
            int nclauses = 2 + static_cast<int>(rng() % (3 * static_cast<unsigned>(nvars)));
            std::vector<std::vector<int>> clauses;
            for (int c = 0; c < nclauses; ++c) {
                int width = 1 + static_cast<int>(rng() % 3);
                std::vector<int> clause;
                for (int l = 0; l < width; ++l) {
                    int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(nvars));
                    clause.push_back((rng() % 2) != 0u ? v : -v);
                }
                clauses.push_back(std::move(clause));
            }
            CdclSolver solver(nvars);
            for (const auto & clause : clauses)
                solver.add_clause(clause);
            SatResult got = solver.solve();
            bool expected = satisfiable_by_enumeration(nvars, clauses);
            REQUIRE(got == (expected ? SatResult::sat : SatResult::unsat));
            if (got == SatResult::sat) {
                // the solver self-checks its models; make sure every
                // variable is reported
                REQUIRE(solver.model().size() == static_cast<std::size_t>(nvars) + 1);
            }
        }
    }

    TEST_CASE("solving is deterministic")
    {
        auto run = [] {
            CdclSolver s(40);
            std::mt19937 rng(13);
            for (int c = 0; c < 160; ++c) {
                std::vector<int> clause;
                for (int l = 0; l < 3; ++l) {
                    int v = 1 + static_cast<int>(rng() % 40u);
                    clause.push_back((rng() % 2) != 0u ? v : -v);
                }
                s.add_clause(clause);
            }
            s.solve();
            return std::pair{s.conflicts(), s.model()};
        };
        auto first = run();
        auto second = run();
        CHECK(first.first == second.first);
        CHECK(first.second == second.second);
    }
}
