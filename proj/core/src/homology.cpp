#include "oneskel/homology.hpp"

#include "oneskel/errors.hpp"
#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"

namespace oneskel {

Int euler_characteristic(const SpaceData& space)
{
    Int chi = static_cast<Int>(space.points.size());
    for (const auto& s : space.surfaces)
        chi += 2 - 2 * s.genus;
    return chi;
}

bool BettiProfile::palindromic() const
{
    for (std::size_t i = 0; i < betti.size(); ++i)
        if (betti[i] != betti[betti.size() - 1 - i])
            return false;
    return true;
}

bool BettiProfile::odd_vanish() const
{
    for (std::size_t i = 1; i < betti.size(); i += 2)
        if (betti[i] != 0)
            return false;
    return true;
}

Int BettiProfile::alternating_sum() const
{
    Int sum = 0;
    for (std::size_t i = 0; i < betti.size(); ++i)
        sum += i % 2 ? -betti[i] : betti[i];
    return sum;
}

BettiProfile betti_numbers(const SpaceData& space, const LatticeVector& xi)
{
    require_generic(xi, space);
    BettiProfile profile;
    profile.betti.assign(2 * space.half_dim + 1, 0);
    profile.euler = euler_characteristic(space);

    auto negatives = [&](const std::vector<DualWeight>& weights) {
        std::size_t count = 0;
        for (const auto& w : weights)
            count += pair(w, xi) < 0;
        return count;
    };
    for (const auto& p : space.points)
    {
        std::size_t d = negatives(p.weights);
        profile.indices[p.id] = d;
        profile.betti.at(2 * d) += 1;
    }
    for (const auto& s : space.surfaces)
    {
        std::size_t d = negatives(s.normal_weights);
        profile.indices[s.id] = d;
        profile.betti.at(2 * d) += 1;
        profile.betti.at(2 * d + 1) += 2 * s.genus;
        profile.betti.at(2 * d + 2) += 1;
    }
    return profile;
}

std::string to_string(const BettiProfile& profile)
{
    std::string out;
    for (std::size_t i = 0; i < profile.betti.size(); ++i)
        out += (i ? " " : "") + std::to_string(profile.betti[i]);
    return out;
}

bool MonotoneReport::ok() const
{
    if (!skeleton_identity())
        return false;
    return !asserted || (nonpositive.empty() && s1 == monotone_c1c2 && bound_holds());
}

std::string MonotoneReport::summary() const
{
    std::string out = "S1=" + to_string(s1) + " b2=" + std::to_string(b2) + " bound: ";
    if (!skeleton_identity())
        return out + "skeleton sum differs from pairing " + to_string(pairing);
    if (!asserted)
        return out + "not checked (data not flagged monotone)";
    if (s1 != monotone_c1c2)
        return out + "VIOLATED (monotone requires S1=24)";
    if (!bound_holds())
        return out + "VIOLATED (3(1+b2)=" + std::to_string(3 * (1 + b2)) + " > 24)";
    if (!nonpositive.empty())
        return out + "VIOLATED (c1 is not positive on sphere " + nonpositive.front() + ")";
    return out + "b2<=7 OK";
}

MonotoneReport monotone_bound_check(const SpaceData& space, const ToricOneSkeleton& skel, const LatticeVector& xi)
{
    if (space.half_dim != 3)
        throw WrongDimensionError("the monotone bound is stated for six-dimensional spaces, got dimension "
                                  + std::to_string(2 * space.half_dim));
    EqClass2 c1 = c1_class(space, xi);
    MonotoneReport report;
    report.asserted = space.flags.monotone.value_or(false);
    report.b2 = betti_numbers(space, xi).betti.at(2);
    report.pairing = pair_with_cn1(space, c1, xi).value;
    for (const auto& sphere : skel.spheres)
    {
        Rational value = integrate(sphere, c1, xi);
        report.s1 += value;
        if (value < 1)
            report.nonpositive.push_back(sphere.first + (sphere.second.empty() ? "" : "-" + sphere.second));
    }
    return report;
}

} // namespace oneskel
