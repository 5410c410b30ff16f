#ifndef ONESKEL_TORIC_HPP
#define ONESKEL_TORIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oneskel/hull.hpp"
#include "oneskel/lattice.hpp"
#include "oneskel/space.hpp"

namespace oneskel {

struct DelzantEdge
{
    std::size_t from = 0;
    std::size_t to = 0;
    LatticeVector direction; // primitive, from -> to
    Rational lattice_length;
};

/// A simple lattice polytope with its edge graph.
class DelzantPolytope
{
    public:
        /// Throws DegenerateHullError or NotSimpleError. Does not check unimodularity.
        static DelzantPolytope from_vertices(const std::vector<RationalVector>& points, std::size_t dim);

        std::size_t dim() const noexcept { return hull_.dim(); }
        const ConvexHull& hull() const noexcept { return hull_; }
        const std::vector<RationalVector>& vertices() const noexcept { return hull_.vertices(); }
        const std::vector<DelzantEdge>& edges() const noexcept { return edges_; }

        /// Edge indices at v, in edge order.
        const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }

        /// The vertex at the other end of edge e.
        std::size_t other_end(std::size_t e, std::size_t v) const;

        /// Primitive direction of edge e pointing away from its endpoint v.
        LatticeVector direction_from(std::size_t e, std::size_t v) const;

        /// Primitive edge directions leaving v, in the order of `incident(v)`.
        std::vector<LatticeVector> directions_at(std::size_t v) const;

    private:
        ConvexHull hull_;
        std::vector<DelzantEdge> edges_;
        std::vector<std::vector<std::size_t>> incident_;
};

struct DelzantCheck
{
    bool ok = true;
    std::optional<std::size_t> witness; // first vertex whose edge directions are not a basis
};

DelzantCheck delzant_check(const DelzantPolytope& p);

/// Throws NotDelzantError naming the witness vertex.
void require_delzant(const DelzantPolytope& p);

/// True when some interior point has the same lattice distance to every
/// facet, i.e. the symplectic class is a positive multiple of c1.
bool is_monotone(const DelzantPolytope& p);

/// Fixed data of the toric manifold over p: one point per vertex, weights
/// along the edges, one pairing per edge.
SpaceData toric_fixed_data(const DelzantPolytope& p);

/// Rebuilds the polytope from the positions of complexity-zero data.
DelzantPolytope polytope_of(const SpaceData& toric);

/// Inclusion of a rank-d subtorus into T^m, given by an m x d integer matrix.
class SubtorusEmbedding
{
    public:
        /// Throws DimensionError unless the matrix has full column rank.
        explicit SubtorusEmbedding(IntMatrix iota);

        const IntMatrix& matrix() const noexcept { return iota_; }
        std::size_t ambient_rank() const noexcept { return iota_.rows(); }
        std::size_t rank() const noexcept { return iota_.cols(); }

        DualWeight restrict(const DualWeight& w) const { return transpose_ * w; }
        RationalVector restrict(const RationalVector& x) const { return transpose_ * x; }

        /// Whether restriction maps Z^m onto Z^d.
        bool surjective() const;

    private:
        IntMatrix iota_;
        IntMatrix transpose_;
};

/**
 * Fixed data of the toric manifold over p as a space for a corank-one
 * subtorus. Edges whose direction restricts to zero become fixed spheres with
 * their normal degrees; surviving light edges become pairings; every fat
 * edge gets an extension polytope built from the two-face over it. The
 * monotone flag is set from `is_monotone`.
 * Throws NotDelzantError, DimensionError or NonEffectiveError.
 */
SpaceData restrict_to_subtorus(const DelzantPolytope& p, const SubtorusEmbedding& emb);

SpaceData restrict_to_subtorus(const SpaceData& toric, const SubtorusEmbedding& emb);

// Planar polytopes acted on by a chosen circle.

struct EdgeSlope
{
    Int k = 1;              // circle weight at the lower endpoint
    std::optional<Int> b;   // horizontal run; empty for vertical edges
    int sign = 0;           // sign of the run relative to the rise
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// Slope of a non-horizontal edge with respect to the second coordinate.
EdgeSlope edge_slope(const DelzantPolytope& p, std::size_t e);

struct CircleFixedSphere
{
    std::size_t edge = 0;
    Rational height;
    bool minimum = false;
    bool maximum = false;
};

struct CircleFixedPoint
{
    std::size_t vertex = 0;
    Rational height;
    std::vector<Int> weights;
};

struct ReducedSphere2d
{
    std::size_t edge = 0;
    EdgeSlope slope;
};

struct CircleRestriction
{
    DelzantPolytope polytope; // normalized so that the circle is the second factor
    std::vector<CircleFixedSphere> fixed_spheres;
    std::vector<CircleFixedPoint> points;
    std::vector<ReducedSphere2d> spheres;
};

/// Transforms p by the contragredient of complete_to_unimodular(circle), so
/// the circle becomes (0, 1). Lattice lengths and unimodularity are preserved.
DelzantPolytope normalize_polytope(const DelzantPolytope& p, const LatticeVector& circle);

/// Fixed set and reduced edge spheres of the circle action on a planar toric manifold.
CircleRestriction circle_restriction_4d(const DelzantPolytope& p, const LatticeVector& circle);

// Generators.

DelzantPolytope make_box(const std::vector<Int>& sides);
DelzantPolytope make_simplex(std::size_t dim, Int size);
DelzantPolytope make_product(const DelzantPolytope& a, const DelzantPolytope& b);

/// Cuts vertex v at depth t along every edge. Throws InvalidDataError if the
/// cut reaches another vertex.
DelzantPolytope truncate_vertex(const DelzantPolytope& p, std::size_t v, Int t);

} // namespace oneskel

#endif
