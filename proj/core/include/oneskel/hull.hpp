#ifndef ONESKEL_HULL_HPP
#define ONESKEL_HULL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oneskel/lattice.hpp"
#include "oneskel/rational.hpp"

namespace oneskel {

/// Supporting inequality <normal, x> <= offset with a primitive outward normal.
struct Facet
{
    LatticeVector normal;
    Rational offset;

    friend bool operator==(const Facet&, const Facet&) = default;
};

/**
 * Exact convex hull of finitely many rational points spanning R^dim.
 *
 * Facets are found by brute force over dim-subsets of the distinct input
 * points, so the cost is O(C(N, dim) * N); intended for the small point sets
 * that fixed-point data produces. Vertices are sorted lexicographically and
 * edges are index pairs (i < j) in lexicographic order, which makes vertex
 * and edge numbering a pure function of the point set.
 */
class ConvexHull
{
    public:
        /// Throws DegenerateHullError unless the points affinely span R^dim.
        static ConvexHull of(const std::vector<RationalVector>& points, std::size_t dim);

        std::size_t dim() const noexcept { return dim_; }
        const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
        const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
        const std::vector<Facet>& facets() const noexcept { return facets_; }

        bool contains(const RationalVector& x) const;

        /// Indices of facets whose inequality is tight at x.
        std::vector<std::size_t> tight_facets(const RationalVector& x) const;

        /// Dimension of the smallest face containing x (x must lie in the hull).
        std::size_t face_dimension(const RationalVector& x) const;

        /// Vertex indices of the smallest face containing x.
        std::vector<std::size_t> face_vertices(const RationalVector& x) const;

        std::optional<std::size_t> vertex_index(const RationalVector& x) const;

        /// The edge whose relative interior contains x, if any.
        std::optional<std::size_t> edge_through(const RationalVector& x) const;

        /// Indices of edges incident to vertex v.
        std::vector<std::size_t> incident_edges(std::size_t v) const;

    private:
        std::size_t dim_ = 0;
        std::vector<RationalVector> vertices_;
        std::vector<std::pair<std::size_t, std::size_t>> edges_;
        std::vector<Facet> facets_;
        std::vector<std::vector<std::size_t>> vertex_facets_;
};

/// Rank over Q of the differences points[i] - points[0].
std::size_t affine_rank(const std::vector<RationalVector>& points);

} // namespace oneskel

#endif
