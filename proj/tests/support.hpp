#ifndef ONESKEL_TESTS_SUPPORT_HPP
#define ONESKEL_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "oneskel/space.hpp"
#include "oneskel/toric.hpp"

namespace testing {

using namespace oneskel;

std::string fixture_path(const std::string& name);
SpaceData load_fixture(const std::string& name);

DelzantPolytope unit_cube();
DelzantPolytope hirzebruch_trapezoid(); // (0,0),(2,0),(1,1),(0,1)

SpaceData cube_space();   // cube, iota(a,b) = (a,b,0)
SpaceData cp3_space();    // simplex, iota(a,b) = (a,b,a+b)
SpaceData cp2_space();    // triangle, iota(a) = (a,0)
SpaceData hirzebruch_space(const IntMatrix& iota);

/// [0,6]^3 with five corners cut at depth 1, restricted generically and flagged monotone.
SpaceData b2_eight_space();

/// Sum of edge lattice lengths: the symplectic area of all invariant spheres.
Rational edge_length_sum(const DelzantPolytope& p);

/// Plain fixed-point localization on the full torus with the listed weights
/// at each vertex and restriction -<v, xi> x; no surfaces involved.
Rational full_torus_omega_pairing(const DelzantPolytope& p, const LatticeVector& xi);

/// Boxes, simplices and products with sides at most 6, possibly with a few truncated vertices.
DelzantPolytope random_delzant(std::mt19937_64& rng, std::size_t dim);

/// Random m x (m-1) matrix whose transpose maps Z^m onto Z^(m-1).
IntMatrix random_corank_one(std::mt19937_64& rng, std::size_t m);

} // namespace testing

#endif
