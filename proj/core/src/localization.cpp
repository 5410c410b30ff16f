#include "oneskel/localization.hpp"

#include <vector>

#include "oneskel/errors.hpp"
#include "oneskel/momentdata.hpp"

namespace oneskel {

namespace {

Int restricted(const DualWeight& w, const LatticeVector& xi, const std::string& where)
{
    Int r = pair(w, xi);
    if (r == 0)
        throw NotGenericError("weight " + to_string(w) + " at " + where + " vanishes on xi = " + to_string(xi));
    return r;
}

Rational reciprocal_sum(const std::vector<DualWeight>& weights, const LatticeVector& xi, const std::string& where)
{
    Rational sum = 0;
    for (const auto& w : weights)
        sum += fraction(1, restricted(w, xi, where));
    return sum;
}

} // namespace

void EqClass2::require_covers(const SpaceData& space) const
{
    for (const auto& p : space.points)
        if (!point_values.count(p.id))
            throw InvalidDataError("class has no value at point " + p.id);
    for (const auto& s : space.surfaces)
        if (!surface_values.count(s.id))
            throw InvalidDataError("class has no value at surface " + s.id);
}

Rational EqClass2::x_coefficient(const std::string& component) const
{
    if (auto it = point_values.find(component); it != point_values.end())
        return it->second;
    if (auto it = surface_values.find(component); it != surface_values.end())
        return it->second.b;
    throw InvalidDataError("class has no value at " + component);
}

EqClass2& EqClass2::operator+=(const EqClass2& other)
{
    for (const auto& [id, c] : other.point_values)
        point_values[id] += c;
    for (const auto& [id, v] : other.surface_values)
    {
        auto& mine = surface_values[id];
        mine.a += v.a;
        mine.b += v.b;
    }
    return *this;
}

EqClass2 omega_class(const SpaceData& space, const LatticeVector& xi)
{
    require_generic(xi, space);
    EqClass2 mu;
    for (const auto& p : space.points)
        mu.point_values[p.id] = -pair(p.position, xi);
    for (const auto& s : space.surfaces)
        mu.surface_values[s.id] = {s.area, -pair(s.position, xi)};
    return mu;
}

EqClass2 c1_class(const SpaceData& space, const LatticeVector& xi)
{
    require_generic(xi, space);
    EqClass2 mu;
    for (const auto& p : space.points)
    {
        Int c = 0;
        for (const auto& w : p.weights)
            c += pair(w, xi);
        mu.point_values[p.id] = c;
    }
    for (const auto& s : space.surfaces)
    {
        if (!s.normal_degrees)
            throw MissingDegreesError("surface " + s.id + " has no normal degrees; c1 needs them");
        Int a = 2 - 2 * s.genus;
        for (Int deg : *s.normal_degrees)
            a += deg;
        Int b = 0;
        for (const auto& w : s.normal_weights)
            b += pair(w, xi);
        mu.surface_values[s.id] = {a, b};
    }
    return mu;
}

Rational point_contribution(const IsolatedPoint& p, const EqClass2& mu, const LatticeVector& xi)
{
    auto it = mu.point_values.find(p.id);
    if (it == mu.point_values.end())
        throw InvalidDataError("class has no value at point " + p.id);
    return it->second * reciprocal_sum(p.weights, xi, p.id);
}

Rational surface_term(const SurfaceValue& value, Int genus, std::span<const Int> restricted_weights)
{
    Rational sum = 0;
    for (Int w : restricted_weights)
    {
        if (w == 0)
            throw NotGenericError("zero restricted normal weight");
        sum += fraction(1, w);
    }
    return value.a + Rational(2 * (1 - genus)) * value.b * sum;
}

Rational surface_contribution(const FixedSurface& s, const EqClass2& mu, const LatticeVector& xi)
{
    auto it = mu.surface_values.find(s.id);
    if (it == mu.surface_values.end())
        throw InvalidDataError("class has no value at surface " + s.id);
    std::vector<Int> w;
    for (const auto& alpha : s.normal_weights)
        w.push_back(restricted(alpha, xi, s.id));
    return surface_term(it->second, s.genus, w);
}

PairingResult pair_with_cn1(const SpaceData& space, const EqClass2& mu, const LatticeVector& xi)
{
    mu.require_covers(space);
    PairingResult result;
    for (const auto& p : space.points)
        result.breakdown[p.id] = point_contribution(p, mu, xi);
    for (const auto& s : space.surfaces)
        result.breakdown[s.id] = surface_contribution(s, mu, xi);
    for (const auto& [id, c] : result.breakdown)
        result.value += c;
    return result;
}

Rational integrate_sphere(const Rational& c_p, const Rational& c_q, const DualWeight& alpha, const LatticeVector& xi)
{
    Int w = pair(alpha, xi);
    if (w == 0)
        throw NotGenericError("sphere weight " + to_string(alpha) + " vanishes on xi = " + to_string(xi));
    return (c_p - c_q) / w;
}

} // namespace oneskel
