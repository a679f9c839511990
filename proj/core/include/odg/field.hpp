#pragma once

#include "odg/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace odg {

/// An element of Q(sqrt(3), sqrt(d)) for a squarefree positive integer d,
/// stored as  a + b*sqrt(3) + c*sqrt(d) + e*sqrt(3d).
///
/// d = 1 is the plain hexagonal-lattice field Q(sqrt(3)); the c and e
/// coefficients are folded away in that case. d = 3 is likewise folded
/// (sqrt(3) already lives in the basis), so a stored tag is never 3.
/// Elements with different tags interoperate only if one of them is
/// tag-1; the result takes the wider tag.
class FieldElement {
  public:
    FieldElement() : d_(1) {}
    FieldElement(Rational a) : a_(std::move(a)), d_(1) {}
    FieldElement(long long a) : a_(a), d_(1) {}
    FieldElement(int a) : a_(a), d_(1) {}
    FieldElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)), d_(1) {}
    FieldElement(Rational a, Rational b, Rational c, Rational e, long long d);

    static FieldElement sqrt3() { return FieldElement(0, 1); }
    /// sqrt(n) for a nonnegative integer n, exact: decomposes n = f^2 * d'
    /// and routes d' into the right basis slot. d' not in {1, 3} sets the
    /// tag. Throws on negative input.
    static FieldElement sqrt_of_integer(long long n);

    const Rational & a() const { return a_; }
    const Rational & b() const { return b_; }
    const Rational & c() const { return c_; }
    const Rational & e() const { return e_; }
    long long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && e_.is_zero(); }
    /// True when the value lies in Q (no irrational part).
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && e_.is_zero(); }
    /// True when the value lies in Q(sqrt(3)) (no sqrt(d) part).
    bool in_base_field() const { return c_.is_zero() && e_.is_zero(); }

    /// Re-tags a base-field element (or checks an already matching tag).
    FieldElement promoted(long long d) const;

    FieldElement operator-() const { return FieldElement(-a_, -b_, -c_, -e_, d_); }
    friend FieldElement operator+(const FieldElement & x, const FieldElement & y);
    friend FieldElement operator-(const FieldElement & x, const FieldElement & y);
    friend FieldElement operator*(const FieldElement & x, const FieldElement & y);
    FieldElement & operator+=(const FieldElement & y) { return *this = *this + y; }
    FieldElement & operator-=(const FieldElement & y) { return *this = *this - y; }
    FieldElement & operator*=(const FieldElement & y) { return *this = *this * y; }

    friend FieldElement operator*(const FieldElement & x, const Rational & r)
    {
        return FieldElement(x.a_ * r, x.b_ * r, x.c_ * r, x.e_ * r, x.d_);
    }
    friend FieldElement operator*(const Rational & r, const FieldElement & x) { return x * r; }
    FieldElement div_rational(const Rational & r) const;

    friend bool operator==(const FieldElement & x, const FieldElement & y);

    /// Exact sign of the real value: -1, 0 or +1. Works by comparing the
    /// two conjugate halves (a + b sqrt3) and (c + e sqrt3) sqrt(d) via
    /// controlled squaring; never touches floating point.
    int sign() const;

    /// Lexicographic order on the coefficient tuple (a, b, c, e). This is
    /// the canonical vertex order, not the order of real values.
    std::strong_ordering coeff_order(const FieldElement & y) const;

    /// When the value equals s^2 for an odd positive integer s, returns s.
    /// Irrational or non-square or even-root values give nullopt. A
    /// negative rational value throws (squared distances cannot be
    /// negative, so that is a caller bug).
    std::optional<long long> as_odd_square() const;

    double to_double() const;
    std::string str() const;

    std::size_t hash() const;

  private:
    Rational a_, b_, c_, e_;
    long long d_;
};

std::ostream & operator<<(std::ostream & os, const FieldElement & x);

/// Resolves the common tag of two elements, throwing std::invalid_argument
/// when both are non-1 and different.
long long common_d(long long d1, long long d2);

} // namespace odg

template <>
struct std::hash<odg::FieldElement> {
    std::size_t operator()(const odg::FieldElement & x) const { return x.hash(); }
};
