#pragma once

#include "odg/geometry.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace odg::geom {

struct Edge {
    int u = 0, v = 0;       // vertex indices, u < v, canonical order
    long long len = 0;      // odd integer edge length

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct DetectOptions {
    /// Skip vertex pairs whose floating-point squared distance is provably
    /// not an integer. Purely an accelerator: results never depend on it.
    bool prefilter = true;
};

/// A planar odd-distance graph: a deduplicated set of exact points in
/// canonical order, an irrationality tag shared by all coordinates, and an
/// optional whitelist of edge lengths. Edges are always derived from the
/// coordinates, never stored as primary data.
class OddGraph {
  public:
    OddGraph() = default;
    explicit OddGraph(std::vector<Point> points,
                      std::optional<std::set<long long>> allowed_lengths = std::nullopt);

    int size() const { return static_cast<int>(vertices_.size()); }
    const Point & vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const std::vector<Point> & vertices() const { return vertices_; }
    long long d() const { return d_; }
    const std::optional<std::set<long long>> & allowed_lengths() const { return allowed_; }

    /// Binary search in canonical order.
    std::optional<int> find(const Point & p) const;
    bool contains(const Point & p) const { return find(p).has_value(); }

    OddGraph with_allowed_lengths(std::optional<std::set<long long>> allowed) const;

    /// All odd-integer-distance pairs (restricted to allowed_lengths when
    /// set), in deterministic (u, v) index order.
    std::vector<Edge> detect_edges(const DetectOptions & opts = {}) const;

    /// Per-length edge counts, ascending by length.
    std::vector<std::pair<long long, int>> edge_histogram(const DetectOptions & opts = {}) const;

    /// Unordered vertex pairs whose squared distance equals dist^2 exactly
    /// (dist is any positive rational, not necessarily an integer).
    std::vector<std::pair<int, int>> pairs_at_distance(const Rational & dist) const;

    OddGraph translated(const Point & t) const;
    OddGraph scaled(const ComplexScalar & s) const;
    OddGraph rotated(const Rotation & rot) const { return scaled(rot.unit()); }
    OddGraph negated() const;
    /// Keeps vertices with |v| <= radius (boundary inclusive), decided
    /// exactly. Requires radius > 0.
    OddGraph trimmed(const Rational & radius) const;

    OddGraph without_vertices(const std::vector<int> & indices) const;
    OddGraph induced(const std::vector<int> & indices) const;

    friend OddGraph minkowski(const OddGraph & a, const OddGraph & b);
    friend OddGraph graph_union(const OddGraph & a, const OddGraph & b);

    friend bool operator==(const OddGraph & a, const OddGraph & b)
    {
        return a.d_ == b.d_ && a.vertices_ == b.vertices_ && a.allowed_ == b.allowed_;
    }

  private:
    std::vector<Point> vertices_;
    long long d_ = 1;
    std::optional<std::set<long long>> allowed_;
};

OddGraph minkowski(const OddGraph & a, const OddGraph & b);
OddGraph graph_union(const OddGraph & a, const OddGraph & b);
/// n-fold Minkowski sum, n >= 1.
OddGraph minkowski_power(const OddGraph & g, int n);

/// Degree of every vertex under the graph's edge rule.
std::vector<int> vertex_degrees(const OddGraph & g, const std::vector<Edge> & edges);

} // namespace odg::geom
