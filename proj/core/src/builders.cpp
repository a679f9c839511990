#include "odg/builders.hpp"

#include "odg/triangles.hpp"

#include <cmath>
#include <stdexcept>

namespace odg::build {

using odg::FieldElement;

OddGraph make_t()
{
    std::vector<Point> pts{
        geom::origin(),
        Point(FieldElement(1), FieldElement(0)),
        Point(FieldElement(Rational(1, 2)), FieldElement(Rational(0), Rational(1, 2))),
    };
    return OddGraph(std::move(pts));
}

OddGraph make_h()
{
    OddGraph t = make_t();
    return minkowski(t, t.negated());
}

OddGraph lattice_patch(const Rational & radius)
{
    if (radius.sign() <= 0)
        throw std::invalid_argument("lattice_patch: radius must be positive");
    // |n (1,0) + m (1/2, sqrt3/2)|^2 = n^2 + n m + m^2, so |n|, |m| <= 2r/sqrt(3)
    auto bound = static_cast<long long>(radius.to_double() * 1.1547005383792517) + 2;
    Rational r2 = radius * radius;
    std::vector<Point> pts;
    for (long long n = -bound; n <= bound; ++n) {
        for (long long m = -bound; m <= bound; ++m) {
            Rational norm(n * n + n * m + m * m);
            if (norm <= r2)
                pts.push_back(geom::lattice_point(n, m));
        }
    }
    return OddGraph(std::move(pts));
}

Admissibility check_pair(long long m, long long n)
{
    if (m <= 0 || m % 8 != 0)
        return {false, "m = " + std::to_string(m) + " is not a positive multiple of 8"};
    if (n % 2 == 0)
        return {false, "n = " + std::to_string(n) + " is even"};
    for (const auto & p : tri::enumerate(m))
        if (n == p.n_plus || n == p.n_minus)
            return {true, ""};
    return {false, "(" + std::to_string(m) + ", " + std::to_string(n) +
                       "): m^2 - m n + n^2 is not an odd perfect square"};
}

namespace {

void require_admissible(long long m, long long n, bool allow_inadmissible)
{
    if (allow_inadmissible)
        return;
    Admissibility adm = check_pair(m, n);
    if (!adm.ok)
        throw std::invalid_argument("inadmissible pair: " + adm.reason);
}

OddGraph int_scaled(const OddGraph & g, long long factor)
{
    return g.scaled(ComplexScalar::real(FieldElement(factor)));
}

} // namespace

OddGraph frame(long long m, long long n, bool allow_inadmissible)
{
    require_admissible(m, n, allow_inadmissible);
    OddGraph t = make_t();
    return minkowski(int_scaled(t, n), int_scaled(t, m));
}

OddGraph core(long long m, long long n, bool allow_inadmissible)
{
    return minkowski(frame(m, n, allow_inadmissible), int_scaled(make_h(), m));
}

OddGraph rotor(long long m, long long n, bool allow_inadmissible)
{
    if (n <= 0)
        throw std::invalid_argument("rotor: n must be positive");
    require_admissible(m, n, allow_inadmissible);
    OddGraph h = make_h();
    OddGraph sum = minkowski(int_scaled(h, n), int_scaled(h, m));
    return sum.trimmed(Rational(std::max(n, m)));
}

void ConstructionParams::validate(bool allow_inadmissible) const
{
    if (a <= 0 || a % 2 == 0)
        throw std::invalid_argument("ConstructionParams: family scale must be odd positive");
    if (m1 % (8 * a) != 0 || m2 % (8 * a) != 0)
        throw std::invalid_argument("ConstructionParams: m1, m2 must be multiples of 8a");
    if (n2 <= 0)
        throw std::invalid_argument("ConstructionParams: rotor n2 must be positive");
    if (r % 2 == 0 || r <= 0)
        throw std::invalid_argument("ConstructionParams: rotation edge length must be odd positive");
    if (!(std::llabs(m1 - m2) < r && r < m1 + m2))
        throw std::invalid_argument("ConstructionParams: need |m1-m2| < r < m1+m2");
    require_admissible(m1, n1, allow_inadmissible);
    require_admissible(m2, n2, allow_inadmissible);
}

namespace {

long long oblique_length(long long m, long long n)
{
    mpz_class v = mpz_from(m) * mpz_from(m) - mpz_from(m) * mpz_from(n) + mpz_from(n) * mpz_from(n);
    auto root = exact_sqrt(v);
    if (!root)
        throw std::invalid_argument("no oblique edge for (" + std::to_string(m) + ", " +
                                    std::to_string(n) + ")");
    return root->get_si();
}

std::optional<long long> second_oblique_length(long long m, long long n)
{
    mpz_class v = mpz_from(n) * mpz_from(n) - 2 * mpz_from(m) * mpz_from(n) + 4 * mpz_from(m) * mpz_from(m);
    auto root = exact_sqrt(v);
    if (root && mpz_odd_p(root->get_mpz_t()))
        return root->get_si();
    return std::nullopt;
}

} // namespace

std::set<long long> ConstructionParams::default_lengths() const
{
    std::set<long long> out;
    for (auto [m, n] : {std::pair{m1, n1}, std::pair{m2, n2}}) {
        out.insert(oblique_length(m, n));
        out.insert(std::llabs(n));
        out.insert(std::llabs(n - m));
        out.insert(std::llabs(n + m));
        out.insert(std::llabs(n - 2 * m));
    }
    if (auto s2 = second_oblique_length(m2, n2))
        out.insert(*s2);
    return out;
}

namespace {

OddGraph assemble(const ConstructionParams & p, const BuildOptions & opts, bool with_core,
                  const std::vector<Point> * rotor_deletions)
{
    p.validate(opts.allow_inadmissible);
    // the whitelist of the default build: the structural lengths plus the
    // rotation edge length itself
    std::set<long long> lengths = p.default_lengths();
    lengths.insert(p.r);

    OddGraph f = frame(p.m1, p.n1, opts.allow_inadmissible);
    OddGraph rot = rotor(p.m2, p.n2, opts.allow_inadmissible);
    if (rotor_deletions != nullptr && !rotor_deletions->empty()) {
        std::vector<int> idx;
        for (const Point & q : *rotor_deletions) {
            auto i = rot.find(q);
            if (!i)
                throw std::invalid_argument("g234: deletion is not a rotor vertex");
            idx.push_back(*i);
        }
        OddGraph m2h = int_scaled(make_h(), p.m2);
        for (const Point & q : *rotor_deletions)
            if (m2h.contains(q))
                throw std::invalid_argument("g234: cannot delete a vertex of m2 H");
        rot = rot.without_vertices(idx);
    }

    OddGraph rotated = rot.rotated(p.rotation());
    OddGraph inner = with_core ? graph_union(int_scaled(make_h(), p.m1), rotated) : rotated;
    OddGraph g = minkowski(f, inner);
    if (!opts.permissive)
        g = g.with_allowed_lengths(lengths);
    return g;
}

} // namespace

OddGraph g306(const ConstructionParams & p, const BuildOptions & opts)
{
    return assemble(p, opts, true, nullptr);
}

OddGraph g279(const ConstructionParams & p, const BuildOptions & opts)
{
    return assemble(p, opts, false, nullptr);
}

OddGraph g306_reduced(const ConstructionParams & p, const std::vector<Point> & rotor_deletions,
                      const BuildOptions & opts)
{
    return assemble(p, opts, true, &rotor_deletions);
}

OddGraph g234(const ConstructionParams & p, const std::vector<Point> & rotor_deletions,
              const BuildOptions & opts)
{
    bool family_24_35 = p.m2 % 24 == 0 && (p.m2 / 24) % 2 == 1 && p.n2 * 24 == p.m2 * 35;
    if (!family_24_35)
        throw std::invalid_argument("g234: rotor family must be (24a, 35a) with odd a");
    if (rotor_deletions.empty() || rotor_deletions.size() > 8)
        throw std::invalid_argument("g234: between 1 and 8 rotor deletions expected");
    return assemble(p, opts, true, &rotor_deletions);
}

ConstructionParams g234_default_params()
{
    return ConstructionParams{24, -11, 24, 35, 11, 1};
}

std::vector<Point> g234_default_deletions()
{
    // Two antipodal side-24 rhombi of the rotor's outer ring:
    // {11 u, 11 u + 24 u', 11 u + 24 u'', 35 u} for u = (1,0) and u = (-1,0).
    auto pt = [](long long x_int, long long y_sqrt3) {
        return Point(FieldElement(Rational(x_int)), FieldElement(Rational(0), Rational(y_sqrt3)));
    };
    return {
        pt(11, 0),  pt(23, 12),  pt(23, -12),  pt(35, 0),
        pt(-11, 0), pt(-23, 12), pt(-23, -12), pt(-35, 0),
    };
}

OddGraph g234(const BuildOptions & opts)
{
    return g234(g234_default_params(), g234_default_deletions(), opts);
}

OddGraph g48289(long long r)
{
    OddGraph h8 = minkowski_power(make_h(), 8);
    Rotation rho = Rotation::from_triangle(8, 8, r);
    OddGraph a = graph_union(h8, h8.rotated(rho));
    return minkowski(a, a);
}

OddGraph g2035()
{
    // half-angle rotation for cos(theta) = 5/6: cos = sqrt(33)/6, sin = sqrt(3)/6
    FieldElement cos_h(Rational(0), Rational(0), Rational(0), Rational(1, 6), 11);
    FieldElement sin_h(Rational(0), Rational(1, 6));
    Rotation half = Rotation::from_cos_sin(cos_h, sin_h);

    OddGraph h = make_h();
    OddGraph v = h;
    for (int n : {-2, -1, 1, 2})
        v = graph_union(v, h.rotated(half.pow(n)));
    return minkowski(minkowski(v, v), h);
}

OddGraph g49(long long m, long long n)
{
    if (m <= 0 || n <= 0 || m % 2 != 0 || n % 2 == 0)
        throw std::invalid_argument("g49: need positive even m and odd n");
    OddGraph h = make_h();
    return minkowski(int_scaled(h, n), int_scaled(h, m));
}

OddGraph g49a()
{
    OddGraph h = make_h();
    // i * sqrt(27) = i * 3 sqrt(3)
    ComplexScalar root27_i(FieldElement(0), FieldElement(Rational(0), Rational(3)));
    OddGraph a = graph_union(int_scaled(h, 3), h.scaled(root27_i));
    return minkowski(a, int_scaled(h, 8)).trimmed(Rational(8));
}

OddGraph spindle(const OddGraph & g, const Point & pivot, const Point & tip, long long r)
{
    if (!g.contains(pivot) || !g.contains(tip))
        throw std::invalid_argument("spindle: pivot and tip must be vertices");
    if (r <= 0 || r % 2 == 0)
        throw std::invalid_argument("spindle: rotation edge length must be odd positive");
    FieldElement d2 = geom::dist_sq(pivot, tip);
    if (!d2.is_rational() || !d2.a().is_integer())
        throw std::invalid_argument("spindle: |pivot - tip| must be an integer");
    auto droot = exact_sqrt(d2.a().num());
    if (!droot || *droot == 0)
        throw std::invalid_argument("spindle: |pivot - tip| must be a positive integer");
    long long dist = droot->get_si();
    if (r >= 2 * dist)
        throw std::invalid_argument("spindle: need r < 2 |pivot - tip|");

    // chord condition |tip - rho tip| = r gives cos = (2 D^2 - r^2) / (2 D^2)
    long long den = 2 * dist * dist;
    Rational cos_v(den - r * r, den);
    auto [f, d] = squarefree_decompose(r * r * (4 * dist * dist - r * r));
    Rational coeff(f, den);
    FieldElement sin_v;
    if (d == 1)
        sin_v = FieldElement(coeff);
    else if (d == 3)
        sin_v = FieldElement(Rational(0), coeff);
    else
        sin_v = FieldElement(Rational(0), Rational(0), coeff, Rational(0), d);
    Rotation rho = Rotation::from_cos_sin(FieldElement(cos_v), sin_v);

    OddGraph moved = g.translated(-pivot).rotated(rho).translated(pivot);
    return graph_union(g, moved);
}

} // namespace odg::build
