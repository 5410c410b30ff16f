#include "oneskel/skeleton.hpp"

#include <algorithm>
#include <set>

#include "oneskel/errors.hpp"
#include "oneskel/homology.hpp"
#include "oneskel/toric.hpp"

namespace oneskel {

std::string to_string(SphereKind kind)
{
    switch (kind)
    {
    case SphereKind::pre:
        return "pre";
    case SphereKind::fixed_surface:
        return "fixed";
    case SphereKind::reduced:
        return "reduced";
    }
    return "?";
}

namespace {

using Ref = std::pair<std::string, std::size_t>;

// phi(q) - phi(p) = t * alpha for some t > 0
bool positively_along(const RationalVector& p, const RationalVector& q, const DualWeight& alpha)
{
    std::optional<Rational> t;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        Rational diff = q[i] - p[i];
        if (alpha[i] == 0)
        {
            if (diff != 0)
                return false;
            continue;
        }
        Rational ti = diff / alpha[i];
        if (t && *t != ti)
            return false;
        t = ti;
    }
    return t && *t > 0;
}

bool is_light(const IsolatedPoint& p, std::size_t i)
{
    return classify_weights(p).tags.at(i) == WeightTag::light;
}

RationalVector along(const RationalVector& base, const Rational& t, const LatticeVector& dir)
{
    RationalVector out = base;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += t * dir[i];
    return out;
}

} // namespace

std::vector<SkeletonSphere> build_pre_skeleton(const SpaceData& space)
{
    std::vector<SkeletonSphere> out;
    std::set<Ref> claimed;

    if (space.pairings)
    {
        for (const auto& pr : *space.pairings)
        {
            const auto* p = space.find_point(pr.first.point);
            const auto* q = space.find_point(pr.second.point);
            if (!p || !q || pr.first.weight >= p->weights.size() || pr.second.weight >= q->weights.size())
                throw InvalidDataError("pairing refers to an unknown point or weight");
            const DualWeight& alpha = p->weights[pr.first.weight];
            if (q->weights[pr.second.weight] != -alpha)
                throw InvalidDataError("paired weights at " + p->id + " and " + q->id + " are not opposite");
            if (!is_light(*p, pr.first.weight) || !is_light(*q, pr.second.weight))
                throw InvalidDataError("pairing " + p->id + "-" + q->id + " uses a heavy weight");
            if (!positively_along(p->position, q->position, alpha))
                throw InvalidDataError("pairing " + p->id + "-" + q->id + ": images are not separated along "
                                       + to_string(alpha));
            Ref a{p->id, pr.first.weight}, b{q->id, pr.second.weight};
            if (!claimed.insert(a).second || !claimed.insert(b).second)
                throw AmbiguousPairingError("weight paired twice in explicit pairings at " + p->id + " or " + q->id);
            out.push_back({SphereKind::pre, p->id, q->id, alpha, ""});
        }
    }

    for (const auto& p : space.points)
    {
        WeightClass wc = classify_weights(p);
        for (std::size_t i = 0; i < p.weights.size(); ++i)
        {
            if (wc.tags[i] != WeightTag::light || claimed.count({p.id, i}))
                continue;
            const DualWeight& alpha = p.weights[i];
            std::vector<Ref> candidates;
            for (const auto& q : space.points)
            {
                if (q.id == p.id || !positively_along(p.position, q.position, alpha))
                    continue;
                for (std::size_t j = 0; j < q.weights.size(); ++j)
                    if (q.weights[j] == -alpha && is_light(q, j))
                        candidates.push_back({q.id, j});
            }
            if (candidates.size() != 1)
                throw AmbiguousPairingError("light weight " + to_string(alpha) + " at " + p.id + " has "
                                            + std::to_string(candidates.size())
                                            + " partner candidates; supply explicit pairings");
            if (!claimed.insert(candidates.front()).second)
                throw AmbiguousPairingError("partner of weight " + to_string(alpha) + " at " + p.id
                                            + " is already paired");
            claimed.insert({p.id, i});
            out.push_back({SphereKind::pre, p.id, candidates.front().first, alpha, ""});
        }
    }
    return out;
}

std::size_t pre_skeleton_formula(const SpaceData& space)
{
    if (space.complexity() != 1)
        throw StructureError("the pre-skeleton count applies to complexity-one spaces");
    std::size_t gkm = 0;
    for (const auto& p : space.points)
        gkm += is_gkm(p);
    const std::size_t n = space.half_dim;
    return (n * gkm + (n - 2) * (space.points.size() - gkm)) / 2;
}

std::size_t pre_skeleton_cardinality(const SpaceData& space)
{
    std::size_t formula = pre_skeleton_formula(space);
    std::size_t enumerated = build_pre_skeleton(space).size();
    if (formula != enumerated)
        throw TheoremViolationError("pre-skeleton has " + std::to_string(enumerated) + " spheres, expected "
                                    + std::to_string(formula));
    return formula;
}

std::size_t reduced_skeleton_formula(const SpaceData& space)
{
    std::size_t non_gkm = 0;
    for (const auto& p : space.points)
        non_gkm += !is_gkm(p);
    return non_gkm + (space.half_dim - 1) * space.surfaces.size();
}

std::vector<SkeletonSphere> build_reduced_skeleton(const FatEdgeExtension& ext, const SpaceData& space,
                                                   const FatEdgeInfo& info)
{
    const PolytopeEdge* edge = info.polytope.edge(ext.edge_id);
    if (!edge)
        throw ExtensionMismatchError("extension names unknown edge \"" + ext.edge_id + "\"");
    auto fail = [&](const std::string& what) { throw ExtensionMismatchError("edge " + ext.edge_id + ": " + what); };

    DelzantPolytope raw = DelzantPolytope::from_vertices(ext.polytope, 2);
    if (!delzant_check(raw).ok)
        fail("extension polytope is not Delzant");
    CircleRestriction cr = circle_restriction_4d(raw, ext.circle);
    const DelzantPolytope& q = cr.polytope;
    const UnimodularMap to_normal = complete_to_unimodular(ext.circle);

    std::vector<std::string> comp(q.vertices().size());
    for (const auto& m : ext.component_map)
    {
        auto v = q.hull().vertex_index(to_normal.apply_dual(m.vertex));
        if (!v)
            fail("mapped point " + to_string(m.vertex) + " is not a vertex");
        if (!comp[*v].empty() && comp[*v] != m.component)
            fail("vertex " + to_string(m.vertex) + " mapped twice");
        comp[*v] = m.component;
    }
    for (std::size_t v = 0; v < comp.size(); ++v)
        if (comp[v].empty())
            fail("vertex " + to_string(q.vertices()[v]) + " has no component");

    // orient the edge direction so that it increases with the circle height
    std::size_t lo = 0, hi = 0;
    for (std::size_t v = 0; v < q.vertices().size(); ++v)
    {
        if (q.vertices()[v][1] < q.vertices()[lo][1])
            lo = v;
        if (q.vertices()[v][1] > q.vertices()[hi][1])
            hi = v;
    }
    const RationalVector& base = space.position_of(comp[lo]);
    const Rational base_h = q.vertices()[lo][1];
    LatticeVector up = edge->direction;
    if (!positively_along(base, space.position_of(comp[hi]), up))
        up = -up;
    for (std::size_t v = 0; v < comp.size(); ++v)
        if (space.position_of(comp[v]) != along(base, q.vertices()[v][1] - base_h, up))
            fail("image of " + comp[v] + " does not match the extension height " + to_string(q.vertices()[v][1]));

    for (const auto& fs : cr.fixed_spheres)
    {
        const auto& e = q.edges()[fs.edge];
        if (comp[e.from] != comp[e.to] || !space.find_surface(comp[e.from]))
            fail("horizontal edge is not a single fixed surface");
        const FixedSurface& s = *space.find_surface(comp[e.from]);
        for (std::size_t v : {e.from, e.to})
            for (std::size_t f : q.incident(v))
            {
                if (f == fs.edge)
                    continue;
                Int eps = q.direction_from(f, v)[1];
                if (std::find(s.normal_weights.begin(), s.normal_weights.end(), eps * up) == s.normal_weights.end())
                    fail("surface " + s.id + " has no normal weight " + to_string(eps * up));
            }
    }
    for (const auto& pt : cr.points)
    {
        const IsolatedPoint* p = space.find_point(comp[pt.vertex]);
        if (!p)
            fail("isolated vertex maps to " + comp[pt.vertex] + ", which is not an isolated point");
        std::vector<DualWeight> heavy, expected;
        for (std::size_t i : classify_weights(*p).heavy_indices())
            heavy.push_back(p->weights[i]);
        for (Int k : pt.weights)
            expected.push_back(k * up);
        std::sort(heavy.begin(), heavy.end());
        std::sort(expected.begin(), expected.end());
        if (heavy != expected)
            fail("circle weights at " + p->id + " do not match its heavy weights");
    }

    std::set<std::string> mapped(comp.begin(), comp.end());
    auto expected = fat_edge_components(space, info, ext.edge_id);
    if (std::vector<std::string>(mapped.begin(), mapped.end()) != expected)
        fail("mapped components differ from the components over the edge");

    std::vector<SkeletonSphere> out;
    for (const auto& s : cr.spheres)
        out.push_back({SphereKind::reduced, comp[s.slope.lower], comp[s.slope.upper], s.slope.k * up, ext.edge_id});
    return out;
}

ToricOneSkeleton assemble_skeleton(const SpaceData& space, const std::map<std::string, std::size_t>& selection)
{
    if (space.complexity() != 1)
        throw StructureError("toric one-skeletons are assembled for complexity-one spaces only (complexity "
                             + std::to_string(space.complexity()) + ")");
    FatEdgeInfo info = fat_edges(space);

    ToricOneSkeleton skel;
    skel.half_dim = space.half_dim;
    skel.counts.points = space.points.size();
    for (const auto& p : space.points)
        skel.counts.gkm_points += is_gkm(p);
    skel.counts.surfaces = space.surfaces.size();

    skel.spheres = build_pre_skeleton(space);
    skel.counts.pre = skel.spheres.size();
    if (skel.counts.pre != pre_skeleton_formula(space))
        throw TheoremViolationError("pre-skeleton has " + std::to_string(skel.counts.pre) + " spheres, expected "
                                    + std::to_string(pre_skeleton_formula(space)));

    for (const auto& s : space.surfaces)
        skel.spheres.push_back({SphereKind::fixed_surface, s.id, "", {}, ""});
    skel.counts.fixed = space.surfaces.size();

    for (const auto& ext : space.fat_edge_extensions)
        if (!info.is_fat(ext.edge_id))
            throw ExtensionMismatchError("extension given for " + ext.edge_id + ", which is not a fat edge");

    for (const auto& edge_id : info.fat)
    {
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < space.fat_edge_extensions.size(); ++i)
            if (space.fat_edge_extensions[i].edge_id == edge_id)
                candidates.push_back(i);
        if (candidates.empty())
            throw ExtensionRequiredError("fat edge " + edge_id + " has no extension");
        std::size_t pick = 0;
        if (auto it = selection.find(edge_id); it != selection.end())
        {
            if (it->second >= candidates.size())
                throw InvalidDataError("fat edge " + edge_id + " has only " + std::to_string(candidates.size())
                                       + " extensions");
            pick = it->second;
        }
        skel.extension_used[edge_id] = candidates[pick];
        auto reduced = build_reduced_skeleton(space.fat_edge_extensions[candidates[pick]], space, info);
        skel.counts.reduced_per_edge[edge_id] = reduced.size();
        skel.counts.reduced += reduced.size();
        skel.spheres.insert(skel.spheres.end(), reduced.begin(), reduced.end());
    }
    if (skel.counts.reduced != reduced_skeleton_formula(space))
        throw TheoremViolationError("reduced skeletons have " + std::to_string(skel.counts.reduced)
                                    + " spheres, expected " + std::to_string(reduced_skeleton_formula(space)));
    return skel;
}

Rational integrate(const SkeletonSphere& sphere, const EqClass2& mu, const LatticeVector& xi)
{
    if (sphere.kind == SphereKind::fixed_surface)
    {
        auto it = mu.surface_values.find(sphere.first);
        if (it == mu.surface_values.end())
            throw InvalidDataError("class has no value at surface " + sphere.first);
        return it->second.a;
    }
    return integrate_sphere(mu.x_coefficient(sphere.first), mu.x_coefficient(sphere.second), sphere.weight, xi);
}

Rational sum_over_skeleton(const ToricOneSkeleton& skel, const EqClass2& mu, const LatticeVector& xi)
{
    Rational sum = 0;
    for (const auto& sphere : skel.spheres)
        sum += integrate(sphere, mu, xi);
    return sum;
}

std::vector<NamedClass> default_classes(const SpaceData& space, const LatticeVector& xi)
{
    std::vector<NamedClass> out{{"omega", omega_class(space, xi)}};
    bool degrees = std::all_of(space.surfaces.begin(), space.surfaces.end(),
                               [](const FixedSurface& s) { return s.normal_degrees.has_value(); });
    if (degrees)
        out.push_back({"c1", c1_class(space, xi)});
    return out;
}

bool VerificationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

VerificationReport verify_skeleton(const SpaceData& space, const ToricOneSkeleton& skel,
                                   const std::vector<NamedClass>& classes, const LatticeVector& xi)
{
    VerificationReport report;
    for (const auto& cls : classes)
    {
        IdentityCheck c;
        c.name = "sum over skeleton of " + cls.name + " = pairing with c_{n-1}";
        c.lhs = sum_over_skeleton(skel, cls.value, xi);
        c.rhs = pair_with_cn1(space, cls.value, xi).value;
        c.pass = c.lhs == c.rhs;
        report.checks.push_back(std::move(c));
    }
    IdentityCheck size;
    size.name = "|S| = (n/2) chi";
    size.lhs = static_cast<Int>(skel.size());
    size.rhs = fraction(static_cast<Int>(space.half_dim) * euler_characteristic(space), 2);
    size.pass = size.lhs == size.rhs;
    report.checks.push_back(std::move(size));
    return report;
}

} // namespace oneskel
