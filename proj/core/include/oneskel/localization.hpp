#ifndef ONESKEL_LOCALIZATION_HPP
#define ONESKEL_LOCALIZATION_HPP

#include <map>
#include <span>
#include <string>

#include "oneskel/lattice.hpp"
#include "oneskel/space.hpp"

namespace oneskel {

/// Restriction of a degree-2 class to a fixed surface: a * u + b * x, where u
/// is the positive generator of the surface's second cohomology.
struct SurfaceValue
{
    Rational a;
    Rational b;

    friend bool operator==(const SurfaceValue&, const SurfaceValue&) = default;
};

/**
 * A degree-2 circle-equivariant class recorded by its restrictions to the
 * fixed components: c * x at an isolated point, a * u + b * x at a surface.
 */
struct EqClass2
{
    std::map<std::string, Rational> point_values;
    std::map<std::string, SurfaceValue> surface_values;

    /// Throws InvalidDataError unless every component of `space` has a value.
    void require_covers(const SpaceData& space) const;

    /// Restriction to the point component or, for a surface, its x-coefficient.
    Rational x_coefficient(const std::string& component) const;

    EqClass2& operator+=(const EqClass2& other);
    friend EqClass2 operator+(EqClass2 a, const EqClass2& b) { return a += b; }
    friend bool operator==(const EqClass2&, const EqClass2&) = default;
};

struct PairingResult
{
    Rational value;
    std::map<std::string, Rational> breakdown; // contribution per component id
};

/// The extension of the symplectic class restricting to -<phi, xi> x at points.
EqClass2 omega_class(const SpaceData& space, const LatticeVector& xi);

/// The first Chern class. Throws MissingDegreesError when a surface lacks normal degrees.
EqClass2 c1_class(const SpaceData& space, const LatticeVector& xi);

Rational point_contribution(const IsolatedPoint& p, const EqClass2& mu, const LatticeVector& xi);

Rational surface_contribution(const FixedSurface& s, const EqClass2& mu, const LatticeVector& xi);

/// Contribution of a surface with restriction (a, b) and restricted normal weights w_i.
Rational surface_term(const SurfaceValue& value, Int genus, std::span<const Int> restricted_weights);

/// The integral of mu against c_{n-1}, localized to the fixed components.
PairingResult pair_with_cn1(const SpaceData& space, const EqClass2& mu, const LatticeVector& xi);

/// Integral over an invariant sphere with poles p, q and weight alpha at p.
Rational integrate_sphere(const Rational& c_p, const Rational& c_q, const DualWeight& alpha,
                          const LatticeVector& xi);

} // namespace oneskel

#endif
