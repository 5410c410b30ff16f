#ifndef ONESKEL_MOMENTDATA_HPP
#define ONESKEL_MOMENTDATA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneskel/hull.hpp"
#include "oneskel/lattice.hpp"
#include "oneskel/space.hpp"

namespace oneskel {

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation
{
    std::string rule;  ///< stable rule name, e.g. "span-rank"
    std::string where; ///< component id or key path
    std::string message;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(const std::string& rule) const;
};

/**
 * Local validity rules: vector lengths, weight counts, nonzero weights,
 * effectiveness of the weights at every component (rank and lattice index of
 * their Z-span), the fixed-submanifold dimension bound, surface attributes,
 * unique ids and well-formed pairings and extension references.
 */
ValidationReport validate(const SpaceData& space);

/// Throws InvalidDataError naming the first violation when `validate` fails.
void require_valid(const SpaceData& space);

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

enum class WeightTag
{
    light,
    heavy
};

struct WeightClass
{
    std::vector<WeightTag> tags;
    /// For exactly two heavy weights w_i, w_j (i < j): the rational with w_j = ratio * w_i.
    std::optional<Rational> heavy_ratio;

    std::vector<std::size_t> heavy_indices() const;
    std::vector<std::size_t> light_indices() const;
};

/// A weight is light iff it is linearly independent of every other weight at the point.
WeightClass classify_weights(const IsolatedPoint& p);

bool is_gkm(const IsolatedPoint& p);

enum class NonGkmPlacement
{
    vertex,       ///< heavy ratio > 0: the image is a vertex of the polytope
    edge_interior ///< heavy ratio < 0: the image lies inside an edge
};

struct NonGkmInfo
{
    std::size_t first_heavy = 0;
    std::size_t second_heavy = 0;
    Rational lambda;
    NonGkmPlacement placement = NonGkmPlacement::vertex;
};

/**
 * Structure of a non-GKM point of a complexity-one space: exactly two heavy
 * weights, proportional with ratio lambda, and a placement that must agree
 * with the moment polytope. Throws StructureError otherwise.
 */
NonGkmInfo check_non_gkm_structure(const IsolatedPoint& p, const SpaceData& space);

// ---------------------------------------------------------------------------
// Genericity
// ---------------------------------------------------------------------------

bool is_generic(const LatticeVector& xi, const SpaceData& space);

LatticeVector find_generic(const SpaceData& space);

/// The first `count` generic directions in enumeration order.
std::vector<LatticeVector> generic_directions(const SpaceData& space, std::size_t count);

/// Throws NotGenericError naming an offending weight unless xi is generic.
void require_generic(const LatticeVector& xi, const SpaceData& space);

// ---------------------------------------------------------------------------
// Moment polytope
// ---------------------------------------------------------------------------

struct PolytopeEdge
{
    std::string id; ///< "e<k>" in lexicographic edge order
    std::size_t from = 0;
    std::size_t to = 0;
    LatticeVector direction; ///< primitive, pointing from `from` to `to`
    Rational lattice_length;
    std::vector<std::string> components; ///< components whose image lies on the closed edge
};

struct ComponentFace
{
    std::string component;
    std::size_t dimension = 0;
    std::vector<std::size_t> vertices;
};

struct MomentPolytope
{
    std::size_t dim = 0;
    long complexity = 0;
    ConvexHull hull;
    std::vector<PolytopeEdge> edges;
    std::vector<ComponentFace> faces; ///< minimal face of every component, sorted by id

    const std::vector<RationalVector>& vertices() const noexcept { return hull.vertices(); }
    const PolytopeEdge* edge(const std::string& id) const;
    const PolytopeEdge& edge_between(std::size_t a, std::size_t b) const;
    bool on_edge(const PolytopeEdge& e, const RationalVector& x) const;
};

/// Convex hull of the component images. Throws DegenerateHullError when flat.
MomentPolytope moment_polytope(const SpaceData& space);

/// A face given by its defining subspace (any spanning set of directions).
struct Face
{
    std::vector<LatticeVector> directions;
};

Face edge_face(const PolytopeEdge& e);

struct StabilizerInfo
{
    std::vector<LatticeVector> basis; ///< saturated kernel of the defining subspace
    std::size_t face_dimension = 0;
    std::size_t preimage_dimension_bound = 0; ///< 2 (complexity + face dimension)
};

StabilizerInfo face_stabilizer(const MomentPolytope& polytope, const Face& face);

struct FatEdgeInfo
{
    MomentPolytope polytope;
    std::vector<std::string> fat; ///< fat edge ids in edge order
    std::map<std::string, std::string> point_edge; ///< non-GKM point id -> its unique fat edge

    bool is_fat(const std::string& edge_id) const;
};

/**
 * Fat edges of a complexity-one space: an edge is fat when a fixed surface
 * at one of its endpoints has a normal weight along it, or when a non-GKM
 * point lies on it with heavy weights along it. Every non-GKM point must meet
 * exactly one fat edge, GKM points none, and every normal weight of a surface
 * must run along an edge of its vertex; otherwise InconsistentDataError.
 */
FatEdgeInfo fat_edges(const SpaceData& space);

/// Components lying in the preimage of a fat edge: the non-GKM points assigned
/// to it and the surfaces at its endpoints with a normal weight along it.
std::vector<std::string> fat_edge_components(const SpaceData& space, const FatEdgeInfo& info,
                                             const std::string& edge_id);

} // namespace oneskel

#endif
