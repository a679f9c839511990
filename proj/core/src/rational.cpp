#include "odg/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>

namespace odg {

Rational::Rational(long long num, long long den)
{
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational::Rational(const mpz_class & num, const mpz_class & den)
{
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational & Rational::operator/=(const Rational & o)
{
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

bool Rational::is_odd_integer() const
{
    return is_integer() && mpz_odd_p(q_.get_num().get_mpz_t());
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class n(std::string(text), 10);
            return Rational(n);
        }
        mpz_class n(std::string(text.substr(0, slash)), 10);
        mpz_class d(std::string(text.substr(slash + 1)), 10);
        return Rational(n, d);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
}

std::string Rational::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream & operator<<(std::ostream & os, const Rational & r)
{
    return os << r.str();
}

namespace {

std::size_t hash_mpz(const mpz_class & z)
{
    // Limb-wise mix; sign folded in at the end.
    std::size_t h = 1469598103934665603ull;
    const mpz_srcptr p = z.get_mpz_t();
    int n = std::abs(p->_mp_size);
    for (int i = 0; i < n; ++i) {
        h ^= static_cast<std::size_t>(p->_mp_d[i]);
        h *= 1099511628211ull;
    }
    if (p->_mp_size < 0)
        h = ~h;
    return h;
}

} // namespace

std::size_t Rational::hash() const
{
    return hash_mpz(q_.get_num()) * 31 + hash_mpz(q_.get_den());
}

std::pair<long long, long long> squarefree_decompose(long long n)
{
    if (n < 1)
        throw std::invalid_argument("squarefree_decompose: input must be positive");
    long long f = 1, d = 1, rem = n;
    for (long long p = 2; p * p <= rem; p += (p == 2 ? 1 : 2)) {
        if (rem % p != 0)
            continue;
        int exp = 0;
        while (rem % p == 0) {
            rem /= p;
            ++exp;
        }
        for (int i = 0; i < exp / 2; ++i)
            f *= p;
        if (exp % 2 != 0)
            d *= p;
    }
    d *= rem; // remainder is 1 or prime
    return {f, d};
}

mpz_class isqrt(const mpz_class & n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<mpz_class> exact_sqrt(const mpz_class & n)
{
    if (n < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    return isqrt(n);
}

} // namespace odg
