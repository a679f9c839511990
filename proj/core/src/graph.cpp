#include "odg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace odg::geom {

namespace {

long long points_common_d(const std::vector<Point> & pts)
{
    long long d = 1;
    for (const Point & p : pts) {
        d = common_d(d, p.x.d());
        d = common_d(d, p.y.d());
    }
    return d;
}

} // namespace

OddGraph::OddGraph(std::vector<Point> points, std::optional<std::set<long long>> allowed_lengths)
    : vertices_(std::move(points)), allowed_(std::move(allowed_lengths))
{
    d_ = points_common_d(vertices_);
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Point & p, const Point & q) { return p.canonical_order(q) < 0; });
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (allowed_) {
        for (long long len : *allowed_)
            if (len <= 0 || len % 2 == 0)
                throw std::invalid_argument("OddGraph: allowed lengths must be odd positive");
    }
}

std::optional<int> OddGraph::find(const Point & p) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p,
                               [](const Point & a, const Point & b) {
                                   return a.canonical_order(b) < 0;
                               });
    if (it != vertices_.end() && *it == p)
        return static_cast<int>(it - vertices_.begin());
    return std::nullopt;
}

OddGraph OddGraph::with_allowed_lengths(std::optional<std::set<long long>> allowed) const
{
    OddGraph g = *this;
    if (allowed)
        for (long long len : *allowed)
            if (len <= 0 || len % 2 == 0)
                throw std::invalid_argument("OddGraph: allowed lengths must be odd positive");
    g.allowed_ = std::move(allowed);
    return g;
}

namespace {

struct ApproxPoint {
    double x, y;
};

// Conservative absolute error bound for a double-evaluated squared
// distance between points of this magnitude. The true rounding error is
// orders of magnitude below this; pairs inside the margin always get the
// exact test, so the filter can only cost time, never correctness.
double dist_sq_margin(double max_abs_coord)
{
    double m = std::max(1.0, max_abs_coord);
    return std::max(1e-9, 4.0 * m * m * 1e-12);
}

std::vector<ApproxPoint> approximate(const std::vector<Point> & pts, double & max_abs)
{
    std::vector<ApproxPoint> out;
    out.reserve(pts.size());
    max_abs = 0.0;
    for (const Point & p : pts) {
        ApproxPoint a{p.x.to_double(), p.y.to_double()};
        max_abs = std::max({max_abs, std::fabs(a.x), std::fabs(a.y)});
        out.push_back(a);
    }
    return out;
}

} // namespace

namespace {

// True when t (a nonnegative integer) is s^2 for odd s.
bool is_odd_square_int(long long t)
{
    if (t <= 0)
        return false;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(t))));
    while (r > 0 && r * r > t)
        --r;
    while ((r + 1) * (r + 1) <= t)
        ++r;
    return r * r == t && r % 2 == 1;
}

} // namespace

std::vector<Edge> OddGraph::detect_edges(const DetectOptions & opts) const
{
    std::vector<Edge> edges;
    const int n = size();

    std::vector<ApproxPoint> approx;
    double margin = 0.0;
    bool filter = opts.prefilter;
    if (filter) {
        double max_abs = 0.0;
        approx = approximate(vertices_, max_abs);
        margin = dist_sq_margin(2.0 * max_abs);
        // the integer-rounding argument below needs 2*margin < 1
        if (margin >= 0.25)
            filter = false;
    }

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (filter) {
                double dx = approx[u].x - approx[v].x;
                double dy = approx[u].y - approx[v].y;
                double d2 = dx * dx + dy * dy;
                double nearest = std::nearbyint(d2);
                if (std::fabs(d2 - nearest) > margin)
                    continue; // provably not an integer
                // If the exact value is an integer it equals `nearest`
                // (margins rule out every other integer), so a non-odd-square
                // candidate can be skipped outright.
                if (nearest < 9e15 && !is_odd_square_int(static_cast<long long>(nearest)))
                    continue;
            }
            FieldElement d2 = dist_sq(vertex(u), vertex(v));
            auto len = d2.as_odd_square();
            if (!len)
                continue;
            if (allowed_ && allowed_->count(*len) == 0)
                continue;
            edges.push_back(Edge{u, v, *len});
        }
    }
    return edges;
}

std::vector<std::pair<long long, int>> OddGraph::edge_histogram(const DetectOptions & opts) const
{
    std::map<long long, int> hist;
    for (const Edge & e : detect_edges(opts))
        ++hist[e.len];
    return {hist.begin(), hist.end()};
}

std::vector<std::pair<int, int>> OddGraph::pairs_at_distance(const Rational & dist) const
{
    if (dist.sign() <= 0)
        throw std::invalid_argument("pairs_at_distance: distance must be positive");
    Rational target_sq = dist * dist;
    FieldElement target(target_sq);
    double target_d = target_sq.to_double();

    double max_abs = 0.0;
    std::vector<ApproxPoint> approx = approximate(vertices_, max_abs);
    double margin = dist_sq_margin(2.0 * max_abs);

    std::vector<std::pair<int, int>> out;
    const int n = size();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double dx = approx[u].x - approx[v].x;
            double dy = approx[u].y - approx[v].y;
            if (std::fabs(dx * dx + dy * dy - target_d) > margin)
                continue;
            if (dist_sq(vertex(u), vertex(v)) == target)
                out.emplace_back(u, v);
        }
    }
    return out;
}

OddGraph OddGraph::translated(const Point & t) const
{
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (const Point & p : vertices_)
        pts.push_back(p + t);
    return OddGraph(std::move(pts), allowed_);
}

OddGraph OddGraph::scaled(const ComplexScalar & s) const
{
    if (s.is_zero())
        throw std::invalid_argument("OddGraph: scaling by zero");
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (const Point & p : vertices_)
        pts.push_back(s.apply(p));
    return OddGraph(std::move(pts), allowed_);
}

OddGraph OddGraph::negated() const
{
    return scaled(ComplexScalar::real(FieldElement(-1)));
}

OddGraph OddGraph::trimmed(const Rational & radius) const
{
    if (radius.sign() <= 0)
        throw std::invalid_argument("OddGraph: trim radius must be positive");
    FieldElement r2(radius * radius);
    std::vector<Point> pts;
    for (const Point & p : vertices_)
        if ((r2 - p.norm_sq()).sign() >= 0)
            pts.push_back(p);
    return OddGraph(std::move(pts), allowed_);
}

OddGraph OddGraph::without_vertices(const std::vector<int> & indices) const
{
    std::vector<bool> drop(vertices_.size(), false);
    for (int i : indices) {
        if (i < 0 || i >= size())
            throw std::out_of_range("without_vertices: index out of range");
        drop[static_cast<std::size_t>(i)] = true;
    }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!drop[i])
            pts.push_back(vertices_[i]);
    return OddGraph(std::move(pts), allowed_);
}

OddGraph OddGraph::induced(const std::vector<int> & indices) const
{
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= size())
            throw std::out_of_range("induced: index out of range");
        pts.push_back(vertices_[static_cast<std::size_t>(i)]);
    }
    return OddGraph(std::move(pts), allowed_);
}

namespace {

std::optional<std::set<long long>> merge_allowed(const OddGraph & a, const OddGraph & b)
{
    // Operands built with different explicit whitelists do not merge
    // meaningfully; keep a whitelist only when unambiguous.
    if (a.allowed_lengths() && b.allowed_lengths()) {
        if (*a.allowed_lengths() == *b.allowed_lengths())
            return a.allowed_lengths();
        return std::nullopt;
    }
    if (a.allowed_lengths())
        return a.allowed_lengths();
    return b.allowed_lengths();
}

} // namespace

OddGraph minkowski(const OddGraph & a, const OddGraph & b)
{
    common_d(a.d(), b.d());
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()));
    for (const Point & p : a.vertices_)
        for (const Point & q : b.vertices_)
            pts.push_back(p + q);
    return OddGraph(std::move(pts), merge_allowed(a, b));
}

OddGraph graph_union(const OddGraph & a, const OddGraph & b)
{
    common_d(a.d(), b.d());
    std::vector<Point> pts = a.vertices_;
    pts.insert(pts.end(), b.vertices_.begin(), b.vertices_.end());
    return OddGraph(std::move(pts), merge_allowed(a, b));
}

OddGraph minkowski_power(const OddGraph & g, int n)
{
    if (n < 1)
        throw std::invalid_argument("minkowski_power: exponent must be >= 1");
    OddGraph acc = g;
    for (int i = 1; i < n; ++i)
        acc = minkowski(acc, g);
    return acc;
}

std::vector<int> vertex_degrees(const OddGraph & g, const std::vector<Edge> & edges)
{
    std::vector<int> deg(static_cast<std::size_t>(g.size()), 0);
    for (const Edge & e : edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

} // namespace odg::geom
