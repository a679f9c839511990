#include "odg/field.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace odg {

FieldElement::FieldElement(Rational a, Rational b, Rational c, Rational e, long long d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e)), d_(d)
{
    if (d_ < 1)
        throw std::invalid_argument("FieldElement: tag must be a positive integer");
    if (d_ == 1) {
        // sqrt(1) = 1, sqrt(3*1) = sqrt(3)
        a_ += c_;
        b_ += e_;
        c_ = 0;
        e_ = 0;
    } else if (d_ == 3) {
        // sqrt(3) is already a basis vector, sqrt(9) = 3
        a_ += e_ * Rational(3);
        b_ += c_;
        c_ = 0;
        e_ = 0;
        d_ = 1;
    } else if (c_.is_zero() && e_.is_zero()) {
        d_ = 1;
    }
}

FieldElement FieldElement::sqrt_of_integer(long long n)
{
    if (n < 0)
        throw std::invalid_argument("sqrt_of_integer: negative input");
    if (n == 0)
        return FieldElement();
    auto [f, d] = squarefree_decompose(n);
    if (d == 1)
        return FieldElement(Rational(f));
    if (d == 3)
        return FieldElement(Rational(0), Rational(f));
    return FieldElement(Rational(0), Rational(0), Rational(f), Rational(0), d);
}

long long common_d(long long d1, long long d2)
{
    if (d1 == d2)
        return d1;
    if (d1 == 1)
        return d2;
    if (d2 == 1)
        return d1;
    throw std::invalid_argument("FieldElement: mixing sqrt(" + std::to_string(d1) +
                                ") with sqrt(" + std::to_string(d2) + ")");
}

FieldElement FieldElement::promoted(long long d) const
{
    long long nd = common_d(d_, d);
    FieldElement r = *this;
    // rational-only elements always stay tag-1
    r.d_ = (r.c_.is_zero() && r.e_.is_zero()) ? 1 : nd;
    return r;
}

FieldElement operator+(const FieldElement & x, const FieldElement & y)
{
    long long d = common_d(x.d_, y.d_);
    return FieldElement(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.e_ + y.e_, d);
}

FieldElement operator-(const FieldElement & x, const FieldElement & y)
{
    long long d = common_d(x.d_, y.d_);
    return FieldElement(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.e_ - y.e_, d);
}

FieldElement operator*(const FieldElement & x, const FieldElement & y)
{
    long long d = common_d(x.d_, y.d_);
    Rational dr(d), d3(3 * d), three(3);
    // basis products: sqrt3*sqrt3 = 3, sqrtd*sqrtd = d, sqrt3d*sqrt3d = 3d,
    // sqrt3*sqrtd = sqrt3d, sqrt3*sqrt3d = 3 sqrtd, sqrtd*sqrt3d = d sqrt3
    Rational a = x.a_ * y.a_ + three * (x.b_ * y.b_) + dr * (x.c_ * y.c_) + d3 * (x.e_ * y.e_);
    Rational b = x.a_ * y.b_ + x.b_ * y.a_ + dr * (x.c_ * y.e_ + x.e_ * y.c_);
    Rational c = x.a_ * y.c_ + x.c_ * y.a_ + three * (x.b_ * y.e_ + x.e_ * y.b_);
    Rational e = x.a_ * y.e_ + x.e_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return FieldElement(std::move(a), std::move(b), std::move(c), std::move(e), d);
}

FieldElement FieldElement::div_rational(const Rational & r) const
{
    if (r.is_zero())
        throw std::invalid_argument("FieldElement: division by zero");
    Rational inv = Rational(1) / r;
    return *this * inv;
}

bool operator==(const FieldElement & x, const FieldElement & y)
{
    if (x.d_ != y.d_ && x.d_ != 1 && y.d_ != 1)
        return false;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.e_ == y.e_;
}

std::strong_ordering FieldElement::coeff_order(const FieldElement & y) const
{
    if (auto c = a_ <=> y.a_; c != 0)
        return c;
    if (auto c = b_ <=> y.b_; c != 0)
        return c;
    if (auto c = c_ <=> y.c_; c != 0)
        return c;
    return e_ <=> y.e_;
}

namespace {

// sign of u + v*sqrt(3) for rationals u, v
int sign_q3(const Rational & u, const Rational & v)
{
    int su = u.sign(), sv = v.sign();
    if (sv == 0)
        return su;
    if (su == 0)
        return sv;
    if (su == sv)
        return su;
    // opposite signs: compare u^2 against 3 v^2 (cannot tie, sqrt3 is irrational)
    Rational diff = u * u - Rational(3) * v * v;
    return su * diff.sign();
}

} // namespace

int FieldElement::sign() const
{
    if (is_zero())
        return 0;
    // x = P + Q*sqrt(d) with P = a + b sqrt3, Q = c + e sqrt3
    int sp = sign_q3(a_, b_);
    int sq = sign_q3(c_, e_);
    if (sq == 0)
        return sp;
    if (sp == 0)
        return sq;
    if (sp == sq)
        return sp;
    // opposite: compare P^2 against d Q^2, both in Q(sqrt3); a tie would
    // force sqrt(d) into Q(sqrt3), impossible for squarefree d not in {1,3}
    Rational p2u = a_ * a_ + Rational(3) * b_ * b_;
    Rational p2v = Rational(2) * a_ * b_;
    Rational dq(d_);
    Rational q2u = dq * (c_ * c_ + Rational(3) * e_ * e_);
    Rational q2v = dq * Rational(2) * c_ * e_;
    return sp * sign_q3(p2u - q2u, p2v - q2v);
}

std::optional<long long> FieldElement::as_odd_square() const
{
    if (!is_rational())
        return std::nullopt;
    if (a_.sign() < 0)
        throw std::invalid_argument("as_odd_square: negative squared distance");
    if (!a_.is_integer())
        return std::nullopt;
    auto root = exact_sqrt(a_.num());
    if (!root)
        return std::nullopt;
    if (mpz_odd_p(root->get_mpz_t()) == 0 || sgn(*root) == 0)
        return std::nullopt;
    if (!root->fits_slong_p())
        throw std::overflow_error("as_odd_square: length does not fit a machine integer");
    return root->get_si();
}

double FieldElement::to_double() const
{
    double s3 = 1.7320508075688772;
    double sd = std::sqrt(static_cast<double>(d_));
    return a_.to_double() + b_.to_double() * s3 + c_.to_double() * sd +
           e_.to_double() * s3 * sd;
}

std::string FieldElement::str() const
{
    std::ostringstream os;
    os << a_.str();
    if (!b_.is_zero())
        os << (b_.sign() < 0 ? "" : "+") << b_.str() << "*sqrt(3)";
    if (!c_.is_zero())
        os << (c_.sign() < 0 ? "" : "+") << c_.str() << "*sqrt(" << d_ << ")";
    if (!e_.is_zero())
        os << (e_.sign() < 0 ? "" : "+") << e_.str() << "*sqrt(" << 3 * d_ << ")";
    return os.str();
}

std::ostream & operator<<(std::ostream & os, const FieldElement & x)
{
    return os << x.str();
}

std::size_t FieldElement::hash() const
{
    std::size_t h = a_.hash();
    h = h * 1000003 ^ b_.hash();
    h = h * 1000003 ^ c_.hash();
    h = h * 1000003 ^ e_.hash();
    return h ^ static_cast<std::size_t>(d_);
}

} // namespace odg
