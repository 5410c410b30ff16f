#ifndef ONESKEL_HOMOLOGY_HPP
#define ONESKEL_HOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "oneskel/lattice.hpp"
#include "oneskel/skeleton.hpp"
#include "oneskel/space.hpp"

namespace oneskel {

/// Points count 1, genus-g surfaces 2 - 2g.
Int euler_characteristic(const SpaceData& space);

struct BettiProfile
{
    std::vector<Int> betti; // b_0 .. b_{2n}
    Int euler = 0;
    std::map<std::string, std::size_t> indices; // half Morse index per component

    bool palindromic() const;
    bool odd_vanish() const;
    Int alternating_sum() const;
};

/// Betti numbers of the perfect Morse-Bott function <phi, xi>.
BettiProfile betti_numbers(const SpaceData& space, const LatticeVector& xi);

/// "b_0 b_1 ... b_2n"
std::string to_string(const BettiProfile& profile);

inline constexpr Int monotone_c1c2 = 24;

struct MonotoneReport
{
    Rational s1;      // sum of the c1 integrals over the skeleton
    Rational pairing; // localization value of c1 c2
    Int b2 = 0;
    bool asserted = false; // data flagged monotone
    std::vector<std::string> nonpositive; // spheres with integral of c1 below 1

    bool skeleton_identity() const { return s1 == pairing; }
    bool bound_holds() const { return Rational(monotone_c1c2) >= 3 * (1 + b2); }
    bool ok() const;
    std::string summary() const;
};

/**
 * In dimension six: the c1 skeleton sum against the localization pairing and,
 * for data flagged monotone, S1 = 24 and 24 >= 3 (1 + b2), which bounds b2
 * by 7. Throws WrongDimensionError unless n = 3.
 */
MonotoneReport monotone_bound_check(const SpaceData& space, const ToricOneSkeleton& skel, const LatticeVector& xi);

} // namespace oneskel

#endif
