#include <doctest.h>

#include "odg/builders.hpp"
#include "odg/graph.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace odg;
using namespace odg::geom;

namespace {

std::multiset<long long> length_multiset(const OddGraph & g, bool prefilter = true)
{
    std::multiset<long long> out;
    for (const Edge & e : g.detect_edges({prefilter}))
        out.insert(e.len);
    return out;
}

OddGraph random_lattice_graph(std::mt19937 & rng, int max_vertices)
{
    std::uniform_int_distribution<long long> coord(-6, 6);
    std::vector<Point> pts;
    for (int i = 0; i < max_vertices; ++i)
        pts.push_back(lattice_point(coord(rng), coord(rng)));
    return OddGraph(std::move(pts));
}

} // namespace

TEST_SUITE("geom")
{
    TEST_CASE("lattice coordinates round-trip")
    {
        CHECK(lattice_coords(lattice_point(1, 0), Rational(1)) == std::pair{1ll, 0ll});
        CHECK(lattice_coords(Point(FieldElement(Rational(1, 2)),
                                   FieldElement(Rational(0), Rational(1, 2))),
                             Rational(1)) == std::pair{0ll, 1ll});
        CHECK(!lattice_coords(Point(FieldElement(Rational(1, 2)), FieldElement(0)), Rational(1)));
        CHECK(lattice_coords(lattice_point(-3, 5, Rational(7)), Rational(7)) ==
              std::pair{-3ll, 5ll});
        CHECK_THROWS_AS(lattice_coords(origin(), Rational(0)), std::invalid_argument);
        // points with a sqrt(d) component are never lattice points
        Point off(FieldElement(Rational(0), Rational(0), Rational(1), Rational(0), 23),
                  FieldElement(0));
        CHECK(!lattice_coords(off, Rational(1)));
    }

    TEST_CASE("lattice squared distances follow the quadratic form")
    {
        for (long long p = -30; p <= 30; ++p) {
            for (long long q = -30; q <= 30; ++q) {
                FieldElement d2 = dist_sq(origin(), lattice_point(p, q));
                REQUIRE(d2 == FieldElement(Rational(p * p + p * q + q * q)));
            }
        }
    }

    TEST_CASE("rotation from a triangle")
    {
        Rotation rho = Rotation::from_triangle(8, 8, 7);
        CHECK(rho.cos() == FieldElement(Rational(79, 128)));
        CHECK(rho.sin() ==
              FieldElement(Rational(0), Rational(0), Rational(21, 128), Rational(0), 23));
        CHECK(rho.d() == 23);
        Rotation rho3 = Rotation::from_triangle(8, 8, 3);
        CHECK(rho3.cos() == FieldElement(Rational(119, 128)));
        CHECK(rho3.sin() ==
              FieldElement(Rational(0), Rational(0), Rational(3, 128), Rational(0), 247));
        CHECK_THROWS_AS(Rotation::from_triangle(8, 8, 16), std::invalid_argument);
        CHECK_THROWS_AS(Rotation::from_triangle(8, 8, 0), std::invalid_argument);
        CHECK_THROWS_AS(Rotation::from_triangle(3, 8, 5), std::invalid_argument);
    }

    TEST_CASE("rotation with a sqrt(3) sine folds into the base field")
    {
        // equilateral triangle: cos = 1/2, sin = sqrt(3)/2
        Rotation rho = Rotation::from_triangle(1, 1, 1);
        CHECK(rho.d() == 1);
        CHECK(rho.sin() == FieldElement(Rational(0), Rational(1, 2)));
        Point image = rho.apply(Point(FieldElement(1), FieldElement(0)));
        CHECK(image == Point(FieldElement(Rational(1, 2)),
                             FieldElement(Rational(0), Rational(1, 2))));
    }

    TEST_CASE("rotation algebra")
    {
        Rotation rho = Rotation::from_triangle(8, 8, 7);
        Rotation id = Rotation::identity();
        CHECK(rho * rho.inverse() == id);
        CHECK(rho.pow(0) == id);
        CHECK(rho.pow(2) == rho * rho);
        CHECK(rho.pow(-1) == rho.inverse());
        CHECK((rho.cos() * rho.cos() + rho.sin() * rho.sin()) == FieldElement(1));
        CHECK_THROWS_AS(Rotation::from_cos_sin(FieldElement(1), FieldElement(1)),
                        std::invalid_argument);
    }

    TEST_CASE("vertex sets deduplicate into canonical order")
    {
        Point a = lattice_point(1, 0), b = lattice_point(0, 1), c = lattice_point(-1, 2);
        OddGraph g(std::vector<Point>{c, a, b, a, c, b, b});
        CHECK(g.size() == 3);
        for (int i = 0; i + 1 < g.size(); ++i)
            CHECK(g.vertex(i).canonical_order(g.vertex(i + 1)) < 0);
        CHECK(g.find(b).has_value());
        CHECK(!g.find(lattice_point(5, 5)).has_value());
    }

    TEST_CASE("trimming is exact and boundary inclusive")
    {
        OddGraph h = build::make_h();
        CHECK(h.trimmed(Rational(1)).size() == 7);
        CHECK(h.trimmed(Rational(1, 2)).size() == 1);
        CHECK_THROWS_AS(h.trimmed(Rational(0)), std::invalid_argument);
    }

    TEST_CASE("edge detection basics")
    {
        OddGraph h = build::make_h();
        auto edges = h.detect_edges();
        CHECK(edges.size() == 12);
        CHECK(std::all_of(edges.begin(), edges.end(),
                          [](const Edge & e) { return e.len == 1; }));
        // 8T: all distances even, no edges
        OddGraph t8 = build::make_t().scaled(ComplexScalar::real(FieldElement(8)));
        CHECK(t8.detect_edges().empty());
    }

    TEST_CASE("allowed length whitelist filters edges")
    {
        OddGraph f = build::frame(8, 3);
        CHECK(f.detect_edges().size() == 21);
        OddGraph restricted = f.with_allowed_lengths(std::set<long long>{3});
        CHECK(restricted.detect_edges().size() == 9);
        CHECK_THROWS_AS(f.with_allowed_lengths(std::set<long long>{4}), std::invalid_argument);
    }

    TEST_CASE("prefilter never changes results")
    {
        std::mt19937 rng(3);
        for (int round = 0; round < 20; ++round) {
            OddGraph g = random_lattice_graph(rng, 25);
            if (round % 2 == 1)
                g = g.rotated(Rotation::from_triangle(8, 8, 7));
            CHECK(g.detect_edges({true}) == g.detect_edges({false}));
        }
    }

    TEST_CASE("isometries preserve the edge length multiset")
    {
        std::mt19937 rng(4);
        Rotation rho = Rotation::from_triangle(8, 8, 7);
        for (int round = 0; round < 10; ++round) {
            OddGraph g = random_lattice_graph(rng, 30);
            auto base = length_multiset(g);
            CHECK(length_multiset(g.rotated(rho)) == base);
            CHECK(length_multiset(g.negated()) == base);
            CHECK(length_multiset(g.translated(lattice_point(2, -1))) == base);
        }
    }

    TEST_CASE("odd scaling multiplies lengths")
    {
        std::mt19937 rng(5);
        OddGraph g = random_lattice_graph(rng, 25);
        auto base = length_multiset(g);
        for (long long u : {3ll, 5ll, 9ll}) {
            std::multiset<long long> expected;
            for (long long len : base)
                expected.insert(len * u);
            CHECK(length_multiset(g.scaled(ComplexScalar::real(FieldElement(u)))) == expected);
        }
    }

    TEST_CASE("minkowski algebra")
    {
        std::mt19937 rng(6);
        OddGraph a = random_lattice_graph(rng, 6);
        OddGraph b = random_lattice_graph(rng, 6);
        OddGraph c = random_lattice_graph(rng, 5);
        CHECK(minkowski(a, b) == minkowski(b, a));
        CHECK(minkowski(minkowski(a, b), c) == minkowski(a, minkowski(b, c)));
        OddGraph origin_only(std::vector<Point>{origin()});
        CHECK(minkowski(a, origin_only) == a);
        CHECK(graph_union(a, a) == a);
        // when both contain the origin, the union embeds in the sum
        OddGraph a0 = graph_union(a, origin_only);
        OddGraph b0 = graph_union(b, origin_only);
        OddGraph sum = minkowski(a0, b0);
        OddGraph both = graph_union(a0, b0);
        for (const Point & p : both.vertices())
            CHECK(sum.contains(p));
    }

    TEST_CASE("union of a hexagon and its quarter turn shares only the origin")
    {
        OddGraph h = build::make_h();
        OddGraph ih = h.scaled(ComplexScalar::imaginary_unit());
        CHECK(graph_union(h, ih).size() == 13);
    }

    TEST_CASE("scaling by zero is rejected")
    {
        CHECK_THROWS_AS(build::make_h().scaled(ComplexScalar::real(FieldElement(0))),
                        std::invalid_argument);
    }

    TEST_CASE("graphs with different irrationalities do not mix")
    {
        OddGraph r23 = build::make_h().rotated(Rotation::from_triangle(8, 8, 7));
        OddGraph r247 = build::make_h().rotated(Rotation::from_triangle(8, 8, 3));
        CHECK_THROWS_AS(graph_union(r23, r247), std::invalid_argument);
        CHECK_THROWS_AS(minkowski(r23, r247), std::invalid_argument);
        CHECK_NOTHROW(graph_union(r23, build::make_h()));
    }

    TEST_CASE("pairs at an exact rational distance")
    {
        OddGraph h = build::make_h();
        CHECK(h.pairs_at_distance(Rational(1)).size() == 12);
        CHECK(h.pairs_at_distance(Rational(2)).size() == 3); // the three diameters
        CHECK(h.pairs_at_distance(Rational(1, 5)).empty());
        CHECK_THROWS_AS(h.pairs_at_distance(Rational(0)), std::invalid_argument);
    }
}
