#pragma once

#include "odg/field.hpp"

#include <array>
#include <optional>

namespace odg::geom {

using odg::FieldElement;
using odg::Rational;

/// Exact planar point. The canonical total order is lexicographic on the
/// coefficient tuples of x then y; it orders vertices in every graph.
struct Point {
    FieldElement x, y;

    Point() = default;
    Point(FieldElement px, FieldElement py) : x(std::move(px)), y(std::move(py)) {}

    friend Point operator+(const Point & p, const Point & q) { return {p.x + q.x, p.y + q.y}; }
    friend Point operator-(const Point & p, const Point & q) { return {p.x - q.x, p.y - q.y}; }
    Point operator-() const { return {-x, -y}; }

    friend bool operator==(const Point & p, const Point & q) { return p.x == q.x && p.y == q.y; }
    std::strong_ordering canonical_order(const Point & q) const
    {
        if (auto c = x.coeff_order(q.x); c != 0)
            return c;
        return y.coeff_order(q.y);
    }

    /// |p|^2, exact.
    FieldElement norm_sq() const { return x * x + y * y; }

    bool is_origin() const { return x.is_zero() && y.is_zero(); }

    std::size_t hash() const { return x.hash() * 2654435761u ^ y.hash(); }
};

Point origin();

/// Squared Euclidean distance, exact.
FieldElement dist_sq(const Point & p, const Point & q);

/// A complex number re + i*im with exact field coordinates; used both as
/// a scaling multiplier and (when of unit modulus) as a rotation.
struct ComplexScalar {
    FieldElement re, im;

    ComplexScalar() : re(1), im(0) {}
    ComplexScalar(FieldElement r, FieldElement i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexScalar real(FieldElement r) { return {std::move(r), FieldElement(0)}; }
    static ComplexScalar imaginary_unit() { return {FieldElement(0), FieldElement(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    /// |z|^2 = re^2 + im^2.
    FieldElement norm_sq() const { return re * re + im * im; }

    friend ComplexScalar operator*(const ComplexScalar & a, const ComplexScalar & b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexScalar operator-() const { return {-re, -im}; }
    ComplexScalar conj() const { return {re, -im}; }

    /// Applies the complex product to a point viewed as x + i y.
    Point apply(const Point & p) const
    {
        return {re * p.x - im * p.y, im * p.x + re * p.y};
    }

    friend bool operator==(const ComplexScalar & a, const ComplexScalar & b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

/// An exact rotation: a unit complex number, optionally remembering the
/// integer triangle (m1, m2, r) it was derived from.
class Rotation {
  public:
    /// Builds the rotation that maps a length-m2 spoke so that the tip of
    /// a length-m1 spoke ends up at distance r: cos = (m1^2+m2^2-r^2)/(2 m1 m2).
    /// Requires |m1 - m2| < r < m1 + m2 (strict); anything else is a
    /// degenerate triangle and throws std::invalid_argument.
    static Rotation from_triangle(long long m1, long long m2, long long r);

    /// Builds a rotation directly from exact cosine and sine. Throws when
    /// cos^2 + sin^2 != 1.
    static Rotation from_cos_sin(FieldElement cos_v, FieldElement sin_v);

    static Rotation identity() { return from_cos_sin(FieldElement(1), FieldElement(0)); }

    const FieldElement & cos() const { return unit_.re; }
    const FieldElement & sin() const { return unit_.im; }
    const ComplexScalar & unit() const { return unit_; }

    /// The irrationality tag of the rotation (1 when the rotation lives in
    /// the base field Q(sqrt3)).
    long long d() const;

    std::optional<std::array<long long, 3>> triangle() const { return triangle_; }

    Rotation inverse() const;
    /// Integer power by repeated exact complex multiplication.
    Rotation pow(int n) const;
    friend Rotation operator*(const Rotation & a, const Rotation & b);

    Point apply(const Point & p) const { return unit_.apply(p); }

    friend bool operator==(const Rotation & a, const Rotation & b) { return a.unit_ == b.unit_; }

  private:
    Rotation(ComplexScalar u, std::optional<std::array<long long, 3>> t)
        : unit_(std::move(u)), triangle_(t) {}

    ComplexScalar unit_;
    std::optional<std::array<long long, 3>> triangle_;
};

/// Solves p = scale * (n*(1,0) + m*(1/2, sqrt3/2)) for integers n, m.
/// Points with sqrt(d) components have no solution. Throws when scale = 0.
std::optional<std::pair<long long, long long>> lattice_coords(const Point & p,
                                                              const Rational & scale);

/// The lattice point scale * (n*(1,0) + m*(1/2, sqrt3/2)).
Point lattice_point(long long n, long long m, const Rational & scale = Rational(1));

} // namespace odg::geom
