#ifndef ONESKEL_SKELETON_HPP
#define ONESKEL_SKELETON_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"
#include "oneskel/space.hpp"

namespace oneskel {

enum class SphereKind
{
    pre,
    fixed_surface,
    reduced
};

std::string to_string(SphereKind kind);

struct SkeletonSphere
{
    SphereKind kind = SphereKind::pre;
    std::string first;  // endpoint with weight `weight`; the surface itself for fixed_surface
    std::string second; // other endpoint; empty for fixed_surface
    DualWeight weight;
    std::string source; // fat edge id for reduced spheres
};

struct SkeletonCounts
{
    std::size_t points = 0;
    std::size_t gkm_points = 0;
    std::size_t surfaces = 0;
    std::size_t pre = 0;
    std::size_t fixed = 0;
    std::size_t reduced = 0;
    std::map<std::string, std::size_t> reduced_per_edge;
};

struct ToricOneSkeleton
{
    std::size_t half_dim = 0;
    std::vector<SkeletonSphere> spheres;
    SkeletonCounts counts;
    std::map<std::string, std::size_t> extension_used; // fat edge id -> index into fat_edge_extensions

    std::size_t size() const noexcept { return spheres.size(); }
};

/**
 * Invariant spheres of light weights at isolated points. Explicit pairings
 * are used as given; every other light weight alpha at p is matched with the
 * unique light weight -alpha at a point q with phi(q) - phi(p) a positive
 * multiple of alpha. Throws AmbiguousPairingError when that is not unique.
 */
std::vector<SkeletonSphere> build_pre_skeleton(const SpaceData& space);

/// Value of (n |GKM| + (n - 2) |non-GKM|) / 2 for complexity-one data.
std::size_t pre_skeleton_formula(const SpaceData& space);

/// Formula value, checked against enumeration; throws TheoremViolationError on mismatch.
std::size_t pre_skeleton_cardinality(const SpaceData& space);

/// Value of |non-GKM| + (n - 1) |surfaces|.
std::size_t reduced_skeleton_formula(const SpaceData& space);

/**
 * Non-horizontal edge spheres of an extension polytope, with weights k
 * times the edge direction. Every vertex must be mapped to a component in the
 * preimage of the edge with matching position and weights; otherwise
 * ExtensionMismatchError.
 */
std::vector<SkeletonSphere> build_reduced_skeleton(const FatEdgeExtension& ext, const SpaceData& space,
                                                   const FatEdgeInfo& info);

/// Uses the first extension of each fat edge unless `selection` picks another.
/// Throws ExtensionRequiredError naming a fat edge without extension.
ToricOneSkeleton assemble_skeleton(const SpaceData& space,
                                   const std::map<std::string, std::size_t>& selection = {});

Rational integrate(const SkeletonSphere& sphere, const EqClass2& mu, const LatticeVector& xi);

Rational sum_over_skeleton(const ToricOneSkeleton& skel, const EqClass2& mu, const LatticeVector& xi);

struct NamedClass
{
    std::string name;
    EqClass2 value;
};

/// The symplectic class, plus c1 when every surface carries normal degrees.
std::vector<NamedClass> default_classes(const SpaceData& space, const LatticeVector& xi);

struct IdentityCheck
{
    std::string name;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

struct VerificationReport
{
    std::vector<IdentityCheck> checks;

    bool ok() const;
};

/// Compares each class's skeleton sum with its localization pairing, and the
/// skeleton size with n/2 times the Euler characteristic.
VerificationReport verify_skeleton(const SpaceData& space, const ToricOneSkeleton& skel,
                                   const std::vector<NamedClass>& classes, const LatticeVector& xi);

} // namespace oneskel

#endif
