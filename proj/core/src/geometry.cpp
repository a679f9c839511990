#include "odg/geometry.hpp"

#include <cstdlib>
#include <stdexcept>

namespace odg::geom {

Point origin()
{
    return Point(FieldElement(0), FieldElement(0));
}

FieldElement dist_sq(const Point & p, const Point & q)
{
    FieldElement dx = p.x - q.x;
    FieldElement dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Rotation Rotation::from_triangle(long long m1, long long m2, long long r)
{
    if (m1 <= 0 || m2 <= 0 || r <= 0)
        throw std::invalid_argument("Rotation: triangle sides must be positive");
    if (!(std::abs(m1 - m2) < r && r < m1 + m2))
        throw std::invalid_argument("Rotation: (" + std::to_string(m1) + ", " +
                                    std::to_string(m2) + ", " + std::to_string(r) +
                                    ") violates |m1-m2| < r < m1+m2");
    long long num = m1 * m1 + m2 * m2 - r * r;
    long long den = 2 * m1 * m2;
    Rational cos_v(num, den);
    // sin^2 = 1 - cos^2 = ((2 m1 m2)^2 - num^2) / (2 m1 m2)^2
    long long delta = den * den - num * num;
    auto [f, d] = squarefree_decompose(delta);
    Rational coeff(f, den);
    FieldElement sin_v;
    if (d == 1)
        sin_v = FieldElement(coeff);
    else if (d == 3)
        sin_v = FieldElement(Rational(0), coeff);
    else
        sin_v = FieldElement(Rational(0), Rational(0), coeff, Rational(0), d);
    return Rotation(ComplexScalar(FieldElement(cos_v), sin_v),
                    std::array<long long, 3>{m1, m2, r});
}

Rotation Rotation::from_cos_sin(FieldElement cos_v, FieldElement sin_v)
{
    FieldElement unit_check = cos_v * cos_v + sin_v * sin_v;
    if (!(unit_check == FieldElement(1)))
        throw std::invalid_argument("Rotation: cos^2 + sin^2 != 1");
    return Rotation(ComplexScalar(std::move(cos_v), std::move(sin_v)), std::nullopt);
}

long long Rotation::d() const
{
    return common_d(unit_.re.d(), unit_.im.d());
}

Rotation Rotation::inverse() const
{
    return Rotation(unit_.conj(), std::nullopt);
}

Rotation operator*(const Rotation & a, const Rotation & b)
{
    return Rotation(a.unit_ * b.unit_, std::nullopt);
}

Rotation Rotation::pow(int n) const
{
    Rotation base = n < 0 ? inverse() : *this;
    int k = n < 0 ? -n : n;
    Rotation acc = Rotation::identity();
    for (int i = 0; i < k; ++i)
        acc = acc * base;
    return acc;
}

Point lattice_point(long long n, long long m, const Rational & scale)
{
    // n*(1,0) + m*(1/2, sqrt3/2)
    Rational x = (Rational(n) + Rational(m, 2)) * scale;
    Rational y_coeff = Rational(m, 2) * scale;
    return Point(FieldElement(x), FieldElement(Rational(0), y_coeff));
}

std::optional<std::pair<long long, long long>> lattice_coords(const Point & p,
                                                              const Rational & scale)
{
    if (scale.is_zero())
        throw std::invalid_argument("lattice_coords: zero scale");
    // x must be rational, y a pure multiple of sqrt(3)
    if (!p.x.is_rational())
        return std::nullopt;
    if (!p.y.in_base_field() || !p.y.a().is_zero())
        return std::nullopt;
    Rational m2 = p.y.b() / scale * Rational(2); // m = 2 * y_b / scale
    Rational n2 = p.x.a() / scale - m2 / Rational(2);
    if (!m2.is_integer() || !n2.is_integer())
        return std::nullopt;
    if (!m2.num().fits_slong_p() || !n2.num().fits_slong_p())
        return std::nullopt;
    return std::make_pair(static_cast<long long>(n2.num().get_si()),
                          static_cast<long long>(m2.num().get_si()));
}

} // namespace odg::geom
