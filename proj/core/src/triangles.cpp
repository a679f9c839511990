#include "odg/triangles.hpp"

#include "odg/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace odg::tri {

namespace {

void require_base(long long m)
{
    if (m <= 0 || m % 8 != 0)
        throw std::invalid_argument("triangle base length must be a positive multiple of 8, got " +
                                    std::to_string(m));
}

std::optional<long long> odd_root(long long v)
{
    if (v <= 0)
        return std::nullopt;
    auto root = exact_sqrt(mpz_from(v));
    if (!root || mpz_odd_p(root->get_mpz_t()) == 0)
        return std::nullopt;
    return root->get_si();
}

} // namespace

std::vector<TriangleParam> enumerate(long long m)
{
    require_base(m);
    long long k = 12 * (m / 8) * (m / 8); // t * (s - t)
    std::vector<TriangleParam> out;
    for (long long t = 1; t * t < k; ++t) {
        if (k % t != 0)
            continue;
        long long s = k / t + t;
        if (s % 2 == 0)
            continue;
        TriangleParam p;
        p.m = m;
        p.t = t;
        p.s = s;
        p.l = s - 2 * t; // = k/t - t, positive since t < sqrt(k)
        p.n_plus = m / 2 + p.l;
        p.n_minus = m / 2 - p.l;
        p.s2 = odd_root(p.n_plus * p.n_plus - 2 * m * p.n_plus + 4 * m * m);
        out.push_back(p);
    }
    // t and k/t give the same s with l negated; t < sqrt(k) keeps the
    // smaller of each pair, so s values are already unique
    std::sort(out.begin(), out.end(),
              [](const TriangleParam & a, const TriangleParam & b) { return a.s < b.s; });
    return out;
}

long long min_s(long long m)
{
    require_base(m);
    mpz_class z = mpz_from(m) * mpz_from(m) * 3 / 4 + 1;
    mpz_class r = isqrt(z);
    if (r * r != z)
        r += 1; // integer ceiling
    long long c = r.get_si();
    return c % 2 == 0 ? c + 1 : c;
}

long long default_bound(long long m)
{
    require_base(m);
    return m / 2 + 12 * (m / 8) * (m / 8) - 1;
}

std::vector<std::pair<long long, long long>> brute_force(long long m, long long n_bound)
{
    require_base(m);
    if (n_bound < default_bound(m))
        throw std::invalid_argument("brute_force: bound too small to be exhaustive");
    std::vector<std::pair<long long, long long>> out;
    for (long long n = -n_bound; n <= n_bound; ++n) {
        mpz_class v = mpz_from(m) * mpz_from(m) - mpz_from(m) * mpz_from(n) + mpz_from(n) * mpz_from(n);
        auto root = exact_sqrt(v);
        if (!root || mpz_odd_p(root->get_mpz_t()) == 0)
            continue;
        out.emplace_back(n, root->get_si());
    }
    return out;
}

bool min_s_achieved(long long m)
{
    auto params = enumerate(m);
    return !params.empty() && params.front().s == min_s(m);
}

std::vector<TableRow> table_n(long long m_below)
{
    if (m_below <= 8)
        throw std::invalid_argument("table bound must exceed 8");
    std::vector<TableRow> rows;
    for (long long m = 8; m < m_below; m += 8)
        rows.push_back(TableRow{m, enumerate(m), min_s_achieved(m)});
    return rows;
}

std::vector<TableRow> table_s(long long m_max)
{
    if (m_max < 8)
        throw std::invalid_argument("table bound must be at least 8");
    std::vector<TableRow> rows;
    for (long long m = 8; m <= m_max; m += 8)
        rows.push_back(TableRow{m, enumerate(m), min_s_achieved(m)});
    return rows;
}

std::string render_table_n(const std::vector<TableRow> & rows)
{
    std::ostringstream os;
    os << "  m | n\n----+----\n";
    for (const TableRow & row : rows) {
        std::set<long long> ns;
        for (const TriangleParam & p : row.entries) {
            ns.insert(p.n_plus);
            ns.insert(p.n_minus);
        }
        os << std::string(row.m < 10 ? 2 : row.m < 100 ? 1 : 0, ' ') << row.m << " | ";
        bool first = true;
        for (long long n : ns) {
            if (!first)
                os << ", ";
            os << n;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_table_s(const std::vector<TableRow> & rows)
{
    std::ostringstream os;
    os << "  m | s  (* = smallest possible for this m)\n----+----\n";
    for (const TableRow & row : rows) {
        os << std::string(row.m < 10 ? 2 : row.m < 100 ? 1 : 0, ' ') << row.m << " | ";
        bool first = true;
        for (const TriangleParam & p : row.entries) {
            if (!first)
                os << ", ";
            os << p.s;
            if (p.s == min_s(row.m))
                os << "*";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace odg::tri
