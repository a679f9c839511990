#include <doctest.h>

#include "odg/expr.hpp"

#include <random>

using namespace odg;
using namespace odg::build;

namespace {

// random well-formed trees for the print/parse round trip
ExprPtr random_expr(std::mt19937 & rng, int depth)
{
    auto leaf = [&]() {
        auto e = std::make_shared<Expr>();
        switch (rng() % 6) {
        case 0: e->kind = Expr::Kind::symbol_t; break;
        case 1: e->kind = Expr::Kind::symbol_h; break;
        case 2: e->kind = Expr::Kind::imaginary; break;
        case 3:
            // literals are nonnegative; a leading '-' parses as negation
            e->kind = Expr::Kind::number;
            e->value = Rational(static_cast<long long>(rng() % 10),
                                static_cast<long long>(rng() % 4) + 1);
            break;
        case 4:
            e->kind = Expr::Kind::frame;
            e->args = {8, (rng() % 2) != 0u ? 3 : -7, 0};
            break;
        default:
            e->kind = Expr::Kind::rho;
            e->args = {8, 8, 7};
            break;
        }
        return ExprPtr(e);
    };
    if (depth == 0)
        return leaf();
    auto e = std::make_shared<Expr>();
    switch (rng() % 6) {
    case 0: e->kind = Expr::Kind::union_op; break;
    case 1: e->kind = Expr::Kind::minkowski; break;
    case 2: e->kind = Expr::Kind::product; break;
    case 3: e->kind = Expr::Kind::negate; break;
    case 4:
        e->kind = Expr::Kind::trim;
        e->value = Rational(static_cast<long long>(rng() % 9) + 1,
                            static_cast<long long>(rng() % 2) + 1);
        break;
    default:
        e->kind = Expr::Kind::mpow;
        e->args = {static_cast<long long>(rng() % 3) + 1, 0, 0};
        break;
    }
    e->lhs = random_expr(rng, depth - 1);
    if (e->kind == Expr::Kind::union_op || e->kind == Expr::Kind::minkowski ||
        e->kind == Expr::Kind::product)
        e->rhs = random_expr(rng, depth - 1);
    return e;
}

} // namespace

TEST_SUITE("expr")
{
    TEST_CASE("the paper constructions parse and evaluate")
    {
        CHECK(eval_graph("F(8,3) (+) (8*H + rho(8,8,7)*R(8,3))").size() == 306);
        CHECK(eval_graph("T (+) -1*T") == make_h());
        CHECK(eval_graph("trim(3*H (+) 8*H, 8)") == rotor(8, 3));
        CHECK(eval_graph("trim((3*H + i*sqrt(27)*H) (+) 8*H, 8)") == g49a());
        CHECK(eval_graph("mpow(H, 2)") == geom::minkowski_power(make_h(), 2));
        CHECK(eval_graph("mpow(H, 8)").size() == 217);
    }

    TEST_CASE("precedence: product, then minkowski, then union")
    {
        // 2*H + H (+) H = (2*H) + (H (+) H)
        OddGraph g = eval_graph("2*H + H (+) H");
        OddGraph expected = geom::graph_union(
            make_h().scaled(geom::ComplexScalar::real(FieldElement(2))),
            geom::minkowski(make_h(), make_h()));
        CHECK(g == expected);
    }

    TEST_CASE("scalar arithmetic inside expressions")
    {
        CHECK(eval_graph("sqrt(12)*T") == eval_graph("2*sqrt(3)*T"));
        CHECK(eval_graph("i*i*T") == eval_graph("-1*T"));
        CHECK(eval_graph("trim(H, 1/2)").size() == 1);
        CHECK(eval_graph("1/2*(2*T)") == make_t());
    }

    TEST_CASE("rho is an exact unit scalar")
    {
        Value v = eval(*parse("rho(8,8,7)"));
        auto & s = std::get<geom::ComplexScalar>(v);
        CHECK(s.norm_sq() == FieldElement(1));
        CHECK(eval_graph("rho(8,8,7)*H").d() == 23);
    }

    TEST_CASE("syntax errors carry a position")
    {
        try {
            parse("F(8,3) (+ H");
            FAIL("expected a parse error");
        } catch (const ParseError & e) {
            CHECK(e.position() == 7);
        }
        CHECK_THROWS_AS(parse(""), ParseError);
        CHECK_THROWS_AS(parse("T T"), ParseError);
        CHECK_THROWS_AS(parse("trim(T)"), ParseError);
        CHECK_THROWS_AS(parse("Q(8,3)"), ParseError);
        CHECK_THROWS_AS(parse("3/0"), ParseError);
    }

    TEST_CASE("type errors at evaluation")
    {
        CHECK_THROWS_WITH_AS(eval_graph("H (+) 3"), doctest::Contains("Minkowski"),
                             std::runtime_error);
        CHECK_THROWS_WITH_AS(eval_graph("H*H"), doctest::Contains("multiply"),
                             std::runtime_error);
        CHECK_THROWS_AS(eval_graph("3 + 4"), std::runtime_error);
        CHECK_THROWS_AS(eval_graph("trim(3, 1)"), std::runtime_error);
        // the whole point of the tag: two rotation irrationalities cannot meet
        CHECK_THROWS_AS(eval_graph("rho(8,8,7)*H (+) rho(8,8,3)*H"), std::invalid_argument);
        // a scalar result is not a graph
        CHECK_THROWS_AS(eval_graph("3*i"), std::invalid_argument);
    }

    TEST_CASE("admissibility flows through evaluation")
    {
        CHECK_THROWS_AS(eval_graph("F(8,7)"), std::invalid_argument);
        EvalOptions relaxed{true};
        CHECK(eval_graph("F(8,7)", relaxed).size() == 9);
    }

    TEST_CASE("print and parse round-trip")
    {
        std::mt19937 rng(7);
        for (int round = 0; round < 200; ++round) {
            ExprPtr e = random_expr(rng, 1 + static_cast<int>(rng() % 3));
            std::string text = print(e);
            ExprPtr back = parse(text);
            CHECK(structurally_equal(*e, *back));
        }
    }
}
