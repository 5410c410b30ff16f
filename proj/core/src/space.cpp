#include "oneskel/space.hpp"

#include <algorithm>

#include "oneskel/errors.hpp"

namespace oneskel {

const IsolatedPoint* SpaceData::find_point(const std::string& id) const
{
    auto it = std::find_if(points.begin(), points.end(), [&](const IsolatedPoint& p) { return p.id == id; });
    return it == points.end() ? nullptr : &*it;
}

const FixedSurface* SpaceData::find_surface(const std::string& id) const
{
    auto it = std::find_if(surfaces.begin(), surfaces.end(), [&](const FixedSurface& s) { return s.id == id; });
    return it == surfaces.end() ? nullptr : &*it;
}

const RationalVector& SpaceData::position_of(const std::string& id) const
{
    if (const auto* p = find_point(id))
        return p->position;
    if (const auto* s = find_surface(id))
        return s->position;
    throw InvalidDataError("unknown component \"" + id + "\"");
}

std::vector<DualWeight> SpaceData::all_weights() const
{
    std::vector<DualWeight> out;
    for (const auto& p : points)
        out.insert(out.end(), p.weights.begin(), p.weights.end());
    for (const auto& s : surfaces)
        out.insert(out.end(), s.normal_weights.begin(), s.normal_weights.end());
    return out;
}

std::vector<RationalVector> SpaceData::positions() const
{
    std::vector<RationalVector> out;
    out.reserve(points.size() + surfaces.size());
    for (const auto& p : points)
        out.push_back(p.position);
    for (const auto& s : surfaces)
        out.push_back(s.position);
    return out;
}

std::vector<std::string> SpaceData::component_ids() const
{
    std::vector<std::string> out;
    for (const auto& p : points)
        out.push_back(p.id);
    for (const auto& s : surfaces)
        out.push_back(s.id);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oneskel
