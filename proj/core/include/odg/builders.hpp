#pragma once

#include "odg/graph.hpp"

#include <set>
#include <string>
#include <vector>

namespace odg::build {

using geom::ComplexScalar;
using geom::OddGraph;
using geom::Point;
using geom::Rotation;
using odg::Rational;

/// The 3-vertex unit triangle {(0,0), (1,0), (1/2, sqrt3/2)}.
OddGraph make_t();
/// The 7-vertex wheel T (+) (-T): unit hexagon plus center.
OddGraph make_h();
/// All hexagonal-lattice points within the given radius of the origin.
OddGraph lattice_patch(const Rational & radius);

struct Admissibility {
    bool ok = false;
    std::string reason;
};

/// Whether (m, n) solves the lattice-triangle equation: m a positive
/// multiple of 8, n odd, and m^2 - m n + n^2 an odd perfect square.
Admissibility check_pair(long long m, long long n);

/// The 9-vertex frame nT (+) mT. Inadmissible pairs throw unless
/// explicitly overridden (exploratory builds probe them on purpose).
OddGraph frame(long long m, long long n, bool allow_inadmissible = false);
/// The 36-vertex core frame(m, n) (+) mH.
OddGraph core(long long m, long long n, bool allow_inadmissible = false);
/// The 31-vertex rotor [nH (+) mH, max(n, m)]; requires n > 0.
OddGraph rotor(long long m, long long n, bool allow_inadmissible = false);

/// The five numbers that pin one member of the 306-vertex family:
/// frame pair (m1, n1), rotor pair (m2, n2) and the rotation edge length r.
struct ConstructionParams {
    long long m1 = 8, n1 = 3;
    long long m2 = 8, n2 = 3;
    long long r = 7;
    long long a = 1; // family scale marker

    void validate(bool allow_inadmissible = false) const;
    /// The structural edge lengths of this construction: s, |n|, |n-m|,
    /// |n+m|, |n-2m| for both pairs, plus the second oblique length when
    /// the rotor family has one. The default build whitelists these
    /// together with r.
    std::set<long long> default_lengths() const;
    Rotation rotation() const { return Rotation::from_triangle(m1, m2, r); }
};

struct BuildOptions {
    /// Leave the edge whitelist unset: every odd distance becomes an edge.
    bool permissive = false;
    bool allow_inadmissible = false;
};

/// The 306-vertex graph F(m1,n1) (+) (m1 H + rho(r) R(m2,n2)).
OddGraph g306(const ConstructionParams & p, const BuildOptions & opts = {});
/// The 279-vertex variant with the core replaced by the bare frame:
/// F(m1,n1) (+) rho(r) R(m2,n2).
OddGraph g279(const ConstructionParams & p, const BuildOptions & opts = {});

/// g306 with the given rotor-local vertices removed from every rotor copy.
/// Deletions must be rotor vertices outside m2 H (those are the only ones
/// not pinned to the core).
OddGraph g306_reduced(const ConstructionParams & p, const std::vector<Point> & rotor_deletions,
                      const BuildOptions & opts = {});

/// The 234-vertex reduction: g306 with the given rotor-local vertices
/// (at most 8, all outside m2 H) removed from every rotor copy. Requires
/// an (m2, n2) = (24a, 35a) rotor family.
OddGraph g234(const ConstructionParams & p, const std::vector<Point> & rotor_deletions,
              const BuildOptions & opts = {});
/// The recorded deletion fixture and parameters behind the default g234.
ConstructionParams g234_default_params();
std::vector<Point> g234_default_deletions();
OddGraph g234(const BuildOptions & opts = {});

/// The 48289-vertex starting graph mpow(G217 + rho G217, 2) where
/// G217 = mpow(H, 8); r picks the rotation edge length (odd, < 16).
OddGraph g48289(long long r = 7);

/// The 2035-vertex inverse-distance counterexample V (+) V (+) H where V
/// unions five half-angle rotations of H (cos = sqrt(33)/6, sin = sqrt(3)/6).
OddGraph g2035();

/// The 49-vertex element nH (+) mH (m even, n odd, both positive).
OddGraph g49(long long m, long long n);
/// The 49-vertex element [(3H + i sqrt(27) H) (+) 8H, 8].
OddGraph g49a();

/// Adjoins a copy of g rotated about pivot so that tip lands at exact
/// distance r from its image (two mono-pairs joined by a rotation edge).
/// pivot and tip must be vertices of g, |pivot - tip| a positive integer D,
/// and r an odd integer with 0 < r < 2D.
OddGraph spindle(const OddGraph & g, const Point & pivot, const Point & tip, long long r);

} // namespace odg::build
