#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace odg::tri {

/// One solution family of the lattice-triangle equation for a given even
/// base length m: the oblique edge has odd length s = 12(m/8)^2/t + t and
/// the in-lattice edge the two odd lengths n = m/2 +- l with l = s - 2t.
struct TriangleParam {
    long long m = 0;
    long long t = 0;        // the smaller divisor of the (t, cofactor) pair
    long long s = 0;        // oblique edge length, odd
    long long l = 0;        // s - 2t, odd
    long long n_plus = 0;   // m/2 + l
    long long n_minus = 0;  // m/2 - l
    std::optional<long long> s2; // second oblique length sqrt(n+^2 - 2 m n+ + 4 m^2), when odd

    friend bool operator==(const TriangleParam &, const TriangleParam &) = default;
};

/// All triangle families for base length m (m must be a positive multiple
/// of 8; anything else throws std::invalid_argument). Deduplicated by s,
/// sorted by s ascending.
std::vector<TriangleParam> enumerate(long long m);

/// Smallest odd integer >= sqrt(3 m^2 / 4 + 1): the floor on oblique
/// lengths for base m. Exact integer arithmetic.
long long min_s(long long m);

/// Independent oracle: scans n in [-n_bound, n_bound] and keeps every pair
/// where m^2 - m n + n^2 is an odd perfect square. Returns (n, s) pairs
/// sorted by n.
std::vector<std::pair<long long, long long>> brute_force(long long m, long long n_bound);

/// A bound large enough that brute_force(m, default_bound(m)) sees every
/// solution: |n| <= m/2 + l_max = m/2 + 12(m/8)^2 - 1.
long long default_bound(long long m);

/// True when some family for m attains min_s(m).
bool min_s_achieved(long long m);

struct TableRow {
    long long m = 0;
    std::vector<TriangleParam> entries; // sorted by s
    bool min_s_flag = false;            // min_s(m) attained by entries.front()
};

/// Rows m = 8, 16, ..., largest multiple of 8 with m < m_below (matching
/// the "(m, n) for m < bound" table) .
std::vector<TableRow> table_n(long long m_below);
/// Rows m = 8, 16, ..., m_max inclusive (the "(m, s) for m <= bound" table).
std::vector<TableRow> table_s(long long m_max);

/// Aligned plain-text rendering. Table 1 style lists sorted n values per m;
/// table 2 style lists sorted s values, flagging min-s achievers with '*'.
std::string render_table_n(const std::vector<TableRow> & rows);
std::string render_table_s(const std::vector<TableRow> & rows);

} // namespace odg::tri
