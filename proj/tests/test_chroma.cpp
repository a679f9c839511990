#include <doctest.h>

#include "odg/builders.hpp"
#include "odg/solve.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace odg;
using namespace odg::build;
using namespace odg::chroma;

namespace {

const std::string kSatCmd = std::string(ODG_SAT_BIN) + " {cnf}";

// every proper coloring by exhaustive enumeration; the oracle the solvers
// are checked against
bool colorable_by_enumeration(int n, const std::vector<std::pair<int, int>> & edges, int k)
{
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool proper = true;
        for (auto [u, v] : edges)
            if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
                proper = false;
                break;
            }
        if (proper)
            return true;
        int i = 0;
        while (i < n && ++col[static_cast<std::size_t>(i)] == k)
            col[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return false;
    }
}

std::vector<std::pair<int, int>> random_edges(std::mt19937 & rng, int n, double p)
{
    std::uniform_real_distribution<double> coin(0, 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                edges.emplace_back(u, v);
    return edges;
}

} // namespace

TEST_SUITE("chroma")
{
    TEST_CASE("encoding sizes")
    {
        CnfInstance k3 = encode(make_t(), 3);
        CHECK(k3.var_count == 9);
        CHECK(k3.clauses.size() == 12); // 3 at-least-one + 3 edges * 3 colors

        CnfInstance single = encode(1, {}, 1);
        CHECK(single.var_count == 1);
        CHECK(single.clauses.size() == 1);

        CnfInstance amo = encode(make_t(), 3, {true, false});
        CHECK(amo.clauses.size() == 12 + 3 * 3); // + v * k(k-1)/2

        CnfInstance pinned = encode(make_t(), 3, {false, true});
        CHECK(pinned.clauses.size() == 12 + 3); // K3 is its own clique
        CHECK(pinned.clauses.back().size() == 1);
    }

    TEST_CASE("the restricted 306-vertex instance")
    {
        OddGraph g = g306(ConstructionParams{8, 3, 8, 3, 7, 1});
        CnfInstance inst = encode(g, 5);
        CHECK(inst.var_count == 1530);
        CHECK(inst.clauses.size() == 306 + 5 * 2448);
    }

    TEST_CASE("dimacs output is byte-stable")
    {
        CnfInstance inst = encode(make_t(), 2);
        CHECK(inst.dimacs() ==
              "p cnf 6 9\n"
              "1 2 0\n3 4 0\n5 6 0\n"
              "-1 -3 0\n-2 -4 0\n"
              "-1 -5 0\n-2 -6 0\n"
              "-3 -5 0\n-4 -6 0\n");
    }

    TEST_CASE("dimacs parses back")
    {
        CnfInstance inst = encode(make_h(), 3);
        std::istringstream in(inst.dimacs());
        DimacsFile file = parse_dimacs(in);
        CHECK(file.var_count == inst.var_count);
        CHECK(file.clauses == inst.clauses);
        std::istringstream junk("nonsense");
        CHECK_THROWS_AS(parse_dimacs(junk), std::invalid_argument);
    }

    TEST_CASE("decode picks the lowest true color and rejects holes")
    {
        CnfInstance inst = encode(2, {{0, 1}}, 2);
        std::vector<signed char> model(static_cast<std::size_t>(inst.var_count) + 1, 0);
        model[static_cast<std::size_t>(inst.var(0, 0))] = 1;
        model[static_cast<std::size_t>(inst.var(0, 1))] = 1; // both true: lowest wins
        model[static_cast<std::size_t>(inst.var(1, 1))] = 1;
        Coloring col = decode(inst, model);
        CHECK(col == Coloring{0, 1});
        model[static_cast<std::size_t>(inst.var(1, 1))] = 0;
        CHECK_THROWS_AS(decode(inst, model), std::invalid_argument);
    }

    TEST_CASE("validation")
    {
        OddGraph t = make_t();
        CHECK(validate(t, {0, 1, 2}, 3));
        CHECK(validate(t, {2, 1, 0}, 3)); // any color permutation stays valid
        CHECK(!validate(t, {0, 0, 1}, 3));
        CHECK(!validate(t, {0, 1}, 3));
        CHECK(!validate(t, {0, 1, 3}, 3));
    }

    TEST_CASE("internal graph decisions")
    {
        OddGraph t = make_t();
        CHECK(solve_internal(t, 2).is_unsat());
        SolveOutcome three = solve_internal(t, 3);
        REQUIRE(three.is_sat());
        CHECK(validate(t, decode(encode(t, 3), three.model), 3));
        // zero node budget reports indeterminate
        CHECK(solve_internal(make_h(), 3, 0).is_indet());
    }

    TEST_CASE("chromatic numbers of the elements")
    {
        CHECK(chi_exact(make_t()).chi == 3);
        CHECK(chi_exact(make_h()).chi == 3);
        CHECK(chi_exact(frame(8, 3)).chi == 3);
        CHECK(chi_exact(rotor(8, 3)).chi == 3);
        CHECK(chi_exact(core(8, 3)).chi == 3);
        ChiResult r = chi_exact(rotor(24, 35));
        CHECK(r.chi == 3);
        CHECK(validate(rotor(24, 35), r.witness, 3));
    }

    TEST_CASE("the hexagon's chromatic number against exhaustive enumeration")
    {
        OddGraph h = make_h();
        auto edges = edge_pairs(h);
        CHECK(!colorable_by_enumeration(h.size(), edges, 2));
        CHECK(colorable_by_enumeration(h.size(), edges, 3));
        CHECK(chi_exact(h).chi == 3);
    }

    TEST_CASE("the vertex limit refuses politely")
    {
        CHECK_THROWS_AS(chi_exact(core(8, 3), 10), LimitExceeded);
        CHECK_NOTHROW(chi_exact(core(8, 3), 64));
    }

    TEST_CASE("chromatic number is monotone under vertex deletion")
    {
        std::mt19937 rng(8);
        OddGraph g = lattice_patch(Rational(2));
        int chi = chi_exact(g).chi;
        for (int round = 0; round < 8; ++round) {
            std::vector<int> victims{static_cast<int>(rng() % static_cast<unsigned>(g.size()))};
            OddGraph smaller = g.without_vertices(victims);
            CHECK(chi_exact(smaller).chi <= chi);
        }
    }

    TEST_CASE("internal and external solvers agree")
    {
        std::mt19937 rng(9);
        for (int round = 0; round < 40; ++round) {
            int n = 4 + static_cast<int>(rng() % 11);
            auto edges = random_edges(rng, n, 0.4);
            int k = 2 + static_cast<int>(rng() % 3);
            CnfInstance inst = encode(n, edges, k);

            SolveOutcome internal = decide_colorable(n, edges, k);
            SolveOutcome external = solve_external(inst, kSatCmd, 60).outcome;
            REQUIRE(internal.kind == external.kind);
            if (std::pow(k, n) < 2e6)
                CHECK(internal.kind == (colorable_by_enumeration(n, edges, k)
                                            ? OutcomeKind::sat
                                            : OutcomeKind::unsat));
            if (external.is_sat())
                CHECK(validate(n, edges, decode(inst, external.model), k));
        }
    }

    TEST_CASE("external solver protocol")
    {
        CnfInstance inst = encode(make_t(), 3);
        // verdict via exit code only
        CHECK(solve_external(inst, "true '{cnf}'; exit 20", 10).outcome.is_unsat());
        // timeout becomes indeterminate, not an error
        SolveOutcome slow = solve_external(inst, "sleep 30; true '{cnf}'", 0.2).outcome;
        CHECK(slow.is_indet());
        CHECK(slow.indet_reason.find("timeout") != std::string::npos);
        // claiming sat without a model is a protocol error
        CHECK_THROWS_AS(solve_external(inst, "echo 's SATISFIABLE' '{cnf}'", 10),
                        SolverOutputError);
        // arbitrary output is a protocol error, not unsat
        CHECK_THROWS_AS(solve_external(inst, "echo hello '{cnf}'", 10), SolverOutputError);
        // a command without the placeholder is refused up front
        CHECK_THROWS_AS(solve_external(inst, "true", 10), std::invalid_argument);
        // unknown is a first-class outcome
        CHECK(solve_external(inst, "echo 's UNKNOWN' '{cnf}'", 10).outcome.is_indet());
    }

    TEST_CASE("proof path substitution")
    {
        CnfInstance inst = encode(make_t(), 2);
        ExternalSolve r = solve_external(inst, "cp {cnf} {proof}; echo 's UNSATISFIABLE'", 10);
        CHECK(r.outcome.is_unsat());
        REQUIRE(!r.proof_file.empty());
        std::ifstream proof(r.proof_file);
        CHECK(proof.good());
    }

    TEST_CASE("forced pairs")
    {
        // path: ends can share a color in a 2-coloring
        OddGraph p3(std::vector<geom::Point>{geom::origin(), geom::lattice_point(1, 0),
                                             geom::lattice_point(2, 0)});
        PairResult r = forced_distinct(p3, 0, 2, 2);
        CHECK(r.status == PairStatus::can_coincide);
        CHECK(r.witness[0] == r.witness[2]);
        CHECK(validate(p3, r.witness, 2));
        // adjacent pairs are trivially distinct
        CHECK(forced_distinct(p3, 0, 1, 2).status == PairStatus::always_distinct);
        // a 2-chromatic question on a triangle has no coloring at all
        OddGraph t_plus(std::vector<geom::Point>{
            geom::origin(), geom::lattice_point(1, 0),
            geom::Point(FieldElement(Rational(1, 2)), FieldElement(Rational(0), Rational(1, 2))),
            geom::lattice_point(10, 0)});
        CHECK(forced_distinct(t_plus, 0, 3, 2).status == PairStatus::base_unsat);
        // an indeterminate solver propagates
        CnfSolveFn stub = [](const CnfInstance &) { return SolveOutcome::indet("stub"); };
        CHECK(forced_distinct(p3, 0, 2, 2, stub).status == PairStatus::indet);
        CHECK_THROWS_AS(forced_distinct(p3, 0, 0, 2), std::invalid_argument);
    }

    TEST_CASE("clique pinning keeps instances equisatisfiable")
    {
        std::mt19937 rng(10);
        for (int round = 0; round < 15; ++round) {
            int n = 5 + static_cast<int>(rng() % 6);
            auto edges = random_edges(rng, n, 0.5);
            int k = 3;
            SolveOutcome plain = solve_internal(encode(n, edges, k));
            SolveOutcome pinned = solve_internal(encode(n, edges, k, {false, true}));
            CHECK(plain.kind == pinned.kind);
        }
    }
}
