#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace odg {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. All coordinates in this library are built from
/// these; no predicate anywhere is allowed to round.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(int n) : q_(n) {}
    Rational(long long num, long long den);
    explicit Rational(const mpz_class & z) : q_(z) {}
    Rational(const mpz_class & num, const mpz_class & den);
    explicit Rational(const mpq_class & q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class & raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_odd_integer() const;
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational & operator+=(const Rational & o) { q_ += o.q_; return *this; }
    Rational & operator-=(const Rational & o) { q_ -= o.q_; return *this; }
    Rational & operator*=(const Rational & o) { q_ *= o.q_; return *this; }
    Rational & operator/=(const Rational & o);

    friend Rational operator+(Rational a, const Rational & b) { return a += b; }
    friend Rational operator-(Rational a, const Rational & b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational & b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational & b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational & a, const Rational & b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational & a, const Rational & b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

    /// Decimal string, "p/q" with the "/q" omitted when q = 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    std::size_t hash() const;

  private:
    mpq_class q_;
};

std::ostream & operator<<(std::ostream & os, const Rational & r);

/// Splits a positive integer as f^2 * d with d squarefree, by trial
/// division up to sqrt(n). Fine for the sizes this library meets
/// (n up to ~10^11); not meant for cryptographic-scale inputs.
/// Throws std::invalid_argument when n < 1.
std::pair<long long, long long> squarefree_decompose(long long n);

/// mpz from a 64-bit integer (gmpxx lacks long long overloads).
inline mpz_class mpz_from(long long v) { return mpz_class(static_cast<long>(v)); }

/// Floor of the integer square root.
mpz_class isqrt(const mpz_class & n);

/// The exact square root of n when n is a perfect square, std::nullopt
/// otherwise.
std::optional<mpz_class> exact_sqrt(const mpz_class & n);

} // namespace odg

template <>
struct std::hash<odg::Rational> {
    std::size_t operator()(const odg::Rational & r) const { return r.hash(); }
};
