#ifndef ONESKEL_SPACE_HPP
#define ONESKEL_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oneskel/lattice.hpp"
#include "oneskel/rational.hpp"

namespace oneskel {

/// An isolated fixed point: its moment image and its n isotropy weights.
struct IsolatedPoint
{
    std::string id;
    RationalVector position;
    std::vector<DualWeight> weights;
};

/**
 * A fixed surface. Its moment image is a single point. `normal_degrees` are
 * the degrees A_j of the normal line bundles (same order as the weights);
 * they are needed only for the first Chern class.
 */
struct FixedSurface
{
    std::string id;
    Int genus = 0;
    RationalVector position;
    Rational area;
    std::vector<DualWeight> normal_weights;
    std::optional<std::vector<Int>> normal_degrees;
};

struct WeightRef
{
    std::string point;
    std::size_t weight = 0;

    friend bool operator==(const WeightRef&, const WeightRef&) = default;
};

/// Explicit matching of a light weight at one point with its negative at another.
struct Pairing
{
    WeightRef first;
    WeightRef second;
};

/// Identifies one vertex of an extension polytope with an ambient fixed component.
struct ExtensionVertex
{
    RationalVector vertex;
    std::string component;
};

/**
 * A planar Delzant polytope whose toric manifold is the four-dimensional
 * preimage of a fat edge, together with the circle (a primitive vector of the
 * rank-2 lattice) that acts as the quotient circle on that preimage. Vertices
 * on horizontal edges map to fixed surfaces, the others to isolated points.
 */
struct FatEdgeExtension
{
    std::string edge_id;
    std::vector<RationalVector> polytope;
    LatticeVector circle{0, 1};
    std::vector<ExtensionVertex> component_map;
};

struct SpaceFlags
{
    std::optional<bool> monotone;
};

/// Fixed-point data of a Hamiltonian torus space of dimension 2 * half_dim.
struct SpaceData
{
    std::size_t torus_rank = 0;
    std::size_t half_dim = 0;
    std::vector<IsolatedPoint> points;
    std::vector<FixedSurface> surfaces;
    std::optional<std::vector<Pairing>> pairings;
    std::vector<FatEdgeExtension> fat_edge_extensions;
    SpaceFlags flags;

    /// n - d; negative values only occur in invalid data.
    long complexity() const noexcept
    {
        return static_cast<long>(half_dim) - static_cast<long>(torus_rank);
    }

    const IsolatedPoint* find_point(const std::string& id) const;
    const FixedSurface* find_surface(const std::string& id) const;
    bool has_component(const std::string& id) const { return find_point(id) || find_surface(id); }

    /// Position of the component with this id; throws InvalidDataError if absent.
    const RationalVector& position_of(const std::string& id) const;

    /// Every isotropy weight of every point and every normal weight of every surface.
    std::vector<DualWeight> all_weights() const;

    std::vector<RationalVector> positions() const;

    /// All component ids, sorted.
    std::vector<std::string> component_ids() const;
};

} // namespace oneskel

#endif
