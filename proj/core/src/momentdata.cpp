#include "oneskel/momentdata.hpp"

#include <algorithm>
#include <set>

#include "oneskel/errors.hpp"

namespace oneskel {

bool ValidationReport::has(const std::string& rule) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

namespace {

void check_weight_span(const std::vector<DualWeight>& weights, std::size_t d, const std::string& where,
                       ValidationReport& report)
{
    for (const auto& w : weights)
        if (w.size() != d || w.is_zero())
            return; // reported separately
    if (rank(weights, d) < d)
    {
        report.violations.push_back({"span-rank", where,
                                     "weights span a sublattice of rank " + std::to_string(rank(weights, d))
                                         + " < " + std::to_string(d)});
        return;
    }
    BigInt index = span_index(weights, d);
    if (index != 1)
        report.violations.push_back(
            {"non-effective", where, "weights span a sublattice of index " + index.str() + " (action not effective)"});
}

void check_weights(const std::vector<DualWeight>& weights, std::size_t d, const std::string& where,
                   ValidationReport& report)
{
    for (std::size_t i = 0; i < weights.size(); ++i)
    {
        if (weights[i].size() != d)
            report.violations.push_back({"vector-length", where + ".weights[" + std::to_string(i) + "]",
                                         "weight " + to_string(weights[i]) + " has length "
                                             + std::to_string(weights[i].size()) + ", torus rank is "
                                             + std::to_string(d)});
        else if (weights[i].is_zero())
            report.violations.push_back(
                {"zero-weight", where + ".weights[" + std::to_string(i) + "]", "isotropy weight is zero"});
    }
}

} // namespace

ValidationReport validate(const SpaceData& space)
{
    ValidationReport report;
    const std::size_t d = space.torus_rank;
    const std::size_t n = space.half_dim;

    if (space.complexity() < 0)
        report.violations.push_back({"complexity", "torus_rank",
                                     "torus rank " + std::to_string(d) + " exceeds half dimension "
                                         + std::to_string(n)});

    std::set<std::string> ids;
    auto check_id = [&](const std::string& id, const std::string& where) {
        if (id.empty())
            report.violations.push_back({"duplicate-id", where, "empty component id"});
        else if (!ids.insert(id).second)
            report.violations.push_back({"duplicate-id", where, "component id \"" + id + "\" used twice"});
    };

    for (std::size_t i = 0; i < space.points.size(); ++i)
    {
        const auto& p = space.points[i];
        const std::string where = p.id.empty() ? "points[" + std::to_string(i) + "]" : p.id;
        check_id(p.id, where);
        if (p.position.size() != d)
            report.violations.push_back({"vector-length", where + ".position",
                                         "position has length " + std::to_string(p.position.size())});
        if (p.weights.size() != n)
            report.violations.push_back({"weight-count", where,
                                         std::to_string(p.weights.size()) + " weights, expected "
                                             + std::to_string(n)});
        check_weights(p.weights, d, where, report);
        check_weight_span(p.weights, d, where, report);
    }

    for (std::size_t i = 0; i < space.surfaces.size(); ++i)
    {
        const auto& s = space.surfaces[i];
        const std::string where = s.id.empty() ? "surfaces[" + std::to_string(i) + "]" : s.id;
        check_id(s.id, where);
        if (space.complexity() <= 0)
            report.violations.push_back(
                {"dimension-bound", where,
                 "fixed surface in a complexity-" + std::to_string(space.complexity())
                     + " space (fixed submanifolds have dimension at most twice the complexity)"});
        if (s.genus < 0)
            report.violations.push_back({"genus", where, "negative genus"});
        if (s.area <= 0)
            report.violations.push_back({"area", where, "area must be positive, got " + to_string(s.area)});
        if (s.position.size() != d)
            report.violations.push_back({"vector-length", where + ".position",
                                         "position has length " + std::to_string(s.position.size())});
        if (n == 0 || s.normal_weights.size() != n - 1)
            report.violations.push_back({"normal-weight-count", where,
                                         std::to_string(s.normal_weights.size()) + " normal weights, expected "
                                             + std::to_string(n == 0 ? 0 : n - 1)});
        check_weights(s.normal_weights, d, where, report);
        check_weight_span(s.normal_weights, d, where, report);
        if (s.normal_degrees && s.normal_degrees->size() != s.normal_weights.size())
            report.violations.push_back({"normal-degrees-length", where,
                                         std::to_string(s.normal_degrees->size()) + " normal degrees for "
                                             + std::to_string(s.normal_weights.size()) + " normal weights"});
    }

    if (space.pairings)
    {
        for (std::size_t i = 0; i < space.pairings->size(); ++i)
        {
            const auto& pr = (*space.pairings)[i];
            const std::string where = "pairings[" + std::to_string(i) + "]";
            const auto* a = space.find_point(pr.first.point);
            const auto* b = space.find_point(pr.second.point);
            if (!a || !b || pr.first.weight >= a->weights.size() || pr.second.weight >= b->weights.size())
            {
                report.violations.push_back({"pairing", where, "refers to an unknown point or weight index"});
                continue;
            }
            if (a->weights[pr.first.weight] != -b->weights[pr.second.weight])
                report.violations.push_back({"pairing", where,
                                             "paired weights " + to_string(a->weights[pr.first.weight]) + " and "
                                                 + to_string(b->weights[pr.second.weight])
                                                 + " are not negatives of each other"});
        }
    }

    for (std::size_t i = 0; i < space.fat_edge_extensions.size(); ++i)
    {
        const auto& ext = space.fat_edge_extensions[i];
        const std::string where = "fat_edges[" + std::to_string(i) + "]";
        if (ext.edge_id.empty())
            report.violations.push_back({"extension", where, "missing edge id"});
        if (ext.circle.size() != 2 || !is_primitive(ext.circle))
            report.violations.push_back({"extension", where, "circle factor must be a primitive rank-2 vector"});
        for (const auto& v : ext.polytope)
            if (v.size() != 2)
                report.violations.push_back({"extension", where, "extension polytope vertices must be planar"});
        for (const auto& m : ext.component_map)
        {
            if (!space.has_component(m.component))
                report.violations.push_back({"extension", where, "unknown component \"" + m.component + "\""});
            if (std::find(ext.polytope.begin(), ext.polytope.end(), m.vertex) == ext.polytope.end())
                report.violations.push_back(
                    {"extension", where, "component_map vertex " + to_string(m.vertex) + " is not a polytope vertex"});
        }
    }
    return report;
}

void require_valid(const SpaceData& space)
{
    ValidationReport report = validate(space);
    if (!report.ok())
    {
        const auto& v = report.violations.front();
        throw InvalidDataError(v.rule + " at " + v.where + ": " + v.message);
    }
}

std::vector<std::size_t> WeightClass::heavy_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] == WeightTag::heavy)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> WeightClass::light_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] == WeightTag::light)
            out.push_back(i);
    return out;
}

WeightClass classify_weights(const IsolatedPoint& p)
{
    WeightClass wc;
    const auto& w = p.weights;
    wc.tags.assign(w.size(), WeightTag::light);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (i != j && parallel(w[i], w[j]))
                wc.tags[i] = WeightTag::heavy;

    auto heavy = wc.heavy_indices();
    if (heavy.size() == 2)
        wc.heavy_ratio = ratio(w[heavy[1]], w[heavy[0]]);
    return wc;
}

bool is_gkm(const IsolatedPoint& p)
{
    return classify_weights(p).heavy_indices().empty();
}

NonGkmInfo check_non_gkm_structure(const IsolatedPoint& p, const SpaceData& space)
{
    if (space.complexity() != 1)
        throw StructureError("non-GKM structure is defined for complexity-one spaces only");
    WeightClass wc = classify_weights(p);
    auto heavy = wc.heavy_indices();
    if (heavy.empty())
        throw StructureError("point " + p.id + " is GKM");
    if (heavy.size() != 2 || !wc.heavy_ratio)
        throw StructureError("point " + p.id + " has " + std::to_string(heavy.size())
                             + " heavy weights; a non-GKM point of a complexity-one space has exactly two");

    NonGkmInfo info;
    info.first_heavy = heavy[0];
    info.second_heavy = heavy[1];
    info.lambda = *wc.heavy_ratio;
    info.placement = info.lambda > 0 ? NonGkmPlacement::vertex : NonGkmPlacement::edge_interior;

    MomentPolytope poly = moment_polytope(space);
    if (info.placement == NonGkmPlacement::vertex)
    {
        if (!poly.hull.vertex_index(p.position))
            throw StructureError("point " + p.id + " has heavy ratio " + to_string(info.lambda)
                                 + " > 0 but its image " + to_string(p.position) + " is not a vertex");
        auto positions = space.positions();
        if (std::count(positions.begin(), positions.end(), p.position) > 1)
            throw StructureError("vertex " + to_string(p.position) + " of non-GKM point " + p.id
                                 + " is shared with another component");
    }
    else
    {
        auto e = poly.hull.edge_through(p.position);
        if (!e)
            throw StructureError("point " + p.id + " has heavy ratio " + to_string(info.lambda)
                                 + " < 0 but its image " + to_string(p.position) + " is not inside an edge");
        if (!same_line(poly.edges[*e].direction, p.weights[info.first_heavy]))
            throw StructureError("heavy weights of " + p.id + " are not parallel to the edge through its image");
    }
    return info;
}

bool is_generic(const LatticeVector& xi, const SpaceData& space)
{
    auto weights = space.all_weights();
    return is_generic(xi, weights);
}

LatticeVector find_generic(const SpaceData& space)
{
    auto weights = space.all_weights();
    return find_generic(weights, space.torus_rank);
}

std::vector<LatticeVector> generic_directions(const SpaceData& space, std::size_t count)
{
    auto weights = space.all_weights();
    return generic_directions(weights, space.torus_rank, count);
}

void require_generic(const LatticeVector& xi, const SpaceData& space)
{
    if (xi.size() != space.torus_rank)
        throw DimensionError("circle direction " + to_string(xi) + " for a rank-" + std::to_string(space.torus_rank)
                             + " torus");
    for (const auto& p : space.points)
        for (const auto& w : p.weights)
            if (pair(w, xi) == 0)
                throw NotGenericError("xi = " + to_string(xi) + " annihilates weight " + to_string(w) + " at "
                                      + p.id);
    for (const auto& s : space.surfaces)
        for (const auto& w : s.normal_weights)
            if (pair(w, xi) == 0)
                throw NotGenericError("xi = " + to_string(xi) + " annihilates normal weight " + to_string(w)
                                      + " at " + s.id);
}

const PolytopeEdge* MomentPolytope::edge(const std::string& id) const
{
    auto it = std::find_if(edges.begin(), edges.end(), [&](const PolytopeEdge& e) { return e.id == id; });
    return it == edges.end() ? nullptr : &*it;
}

const PolytopeEdge& MomentPolytope::edge_between(std::size_t a, std::size_t b) const
{
    if (a > b)
        std::swap(a, b);
    for (const auto& e : edges)
        if (e.from == a && e.to == b)
            return e;
    throw InternalError("no edge between vertices " + std::to_string(a) + " and " + std::to_string(b));
}

bool MomentPolytope::on_edge(const PolytopeEdge& e, const RationalVector& x) const
{
    const auto& a = vertices()[e.from];
    const auto& b = vertices()[e.to];
    // x = a + t (b - a) with 0 <= t <= 1
    std::optional<Rational> t;
    for (std::size_t i = 0; i < dim; ++i)
    {
        Rational span = b[i] - a[i];
        Rational off = x[i] - a[i];
        if (span == 0)
        {
            if (off != 0)
                return false;
            continue;
        }
        Rational ti = off / span;
        if (t && *t != ti)
            return false;
        t = ti;
    }
    return t && *t >= 0 && *t <= 1;
}

MomentPolytope moment_polytope(const SpaceData& space)
{
    MomentPolytope poly;
    poly.dim = space.torus_rank;
    poly.complexity = space.complexity();
    poly.hull = ConvexHull::of(space.positions(), space.torus_rank);

    const auto& verts = poly.hull.vertices();
    for (std::size_t k = 0; k < poly.hull.edges().size(); ++k)
    {
        auto [a, b] = poly.hull.edges()[k];
        PolytopeEdge e;
        e.id = "e" + std::to_string(k);
        e.from = a;
        e.to = b;
        RationalVector diff(poly.dim);
        for (std::size_t i = 0; i < poly.dim; ++i)
            diff[i] = verts[b][i] - verts[a][i];
        e.direction = primitive_direction(diff);
        for (std::size_t i = 0; i < poly.dim; ++i)
            if (e.direction[i] != 0)
            {
                e.lattice_length = diff[i] / e.direction[i];
                break;
            }
        poly.edges.push_back(std::move(e));
    }

    auto attach = [&](const std::string& id, const RationalVector& pos) {
        ComponentFace f;
        f.component = id;
        f.dimension = poly.hull.face_dimension(pos);
        f.vertices = poly.hull.face_vertices(pos);
        poly.faces.push_back(std::move(f));
        for (auto& e : poly.edges)
            if (poly.on_edge(e, pos))
                e.components.push_back(id);
    };
    for (const auto& p : space.points)
        attach(p.id, p.position);
    for (const auto& s : space.surfaces)
        attach(s.id, s.position);
    std::sort(poly.faces.begin(), poly.faces.end(),
              [](const ComponentFace& a, const ComponentFace& b) { return a.component < b.component; });
    for (auto& e : poly.edges)
        std::sort(e.components.begin(), e.components.end());
    return poly;
}

Face edge_face(const PolytopeEdge& e) { return Face{{e.direction}}; }

StabilizerInfo face_stabilizer(const MomentPolytope& polytope, const Face& face)
{
    StabilizerInfo info;
    info.face_dimension = rank(face.directions, polytope.dim);
    info.basis = saturated_kernel(face.directions, polytope.dim);
    info.preimage_dimension_bound = 2 * (static_cast<std::size_t>(std::max(polytope.complexity, 0L))
                                         + info.face_dimension);
    return info;
}

bool FatEdgeInfo::is_fat(const std::string& edge_id) const
{
    return std::find(fat.begin(), fat.end(), edge_id) != fat.end();
}

FatEdgeInfo fat_edges(const SpaceData& space)
{
    if (space.complexity() != 1)
        throw StructureError("fat edges are defined for complexity-one spaces only (complexity "
                             + std::to_string(space.complexity()) + ")");
    FatEdgeInfo info;
    info.polytope = moment_polytope(space);
    const auto& poly = info.polytope;

    std::set<std::string> fat;
    for (const auto& s : space.surfaces)
    {
        auto v = poly.hull.vertex_index(s.position);
        if (!v)
            throw InconsistentDataError("fixed surface " + s.id + " does not sit at a vertex of the moment polytope");
        for (const auto& w : s.normal_weights)
        {
            bool found = false;
            for (std::size_t e : poly.hull.incident_edges(*v))
            {
                if (same_line(poly.edges[e].direction, w))
                {
                    fat.insert(poly.edges[e].id);
                    found = true;
                }
            }
            if (!found)
                throw InconsistentDataError("normal weight " + to_string(w) + " of surface " + s.id
                                            + " does not run along an edge of its vertex");
        }
    }

    std::vector<std::pair<const IsolatedPoint*, LatticeVector>> non_gkm;
    for (const auto& p : space.points)
    {
        WeightClass wc = classify_weights(p);
        auto heavy = wc.heavy_indices();
        if (heavy.empty())
            continue;
        if (heavy.size() != 2)
            throw InconsistentDataError("point " + p.id + " has " + std::to_string(heavy.size())
                                        + " heavy weights; expected two in a complexity-one space");
        non_gkm.emplace_back(&p, p.weights[heavy[0]]);
        for (const auto& e : poly.edges)
            if (poly.on_edge(e, p.position) && same_line(e.direction, p.weights[heavy[0]]))
                fat.insert(e.id);
    }

    for (const auto& e : poly.edges)
        if (fat.count(e.id))
            info.fat.push_back(e.id);

    auto fat_through = [&](const RationalVector& x) {
        std::vector<std::string> out;
        for (const auto& e : poly.edges)
            if (fat.count(e.id) && poly.on_edge(e, x))
                out.push_back(e.id);
        return out;
    };

    for (const auto& [p, heavy] : non_gkm)
    {
        auto through = fat_through(p->position);
        if (through.size() != 1)
            throw InconsistentDataError("non-GKM point " + p->id + " meets " + std::to_string(through.size())
                                        + " fat edges; expected exactly one");
        info.point_edge[p->id] = through.front();
    }
    for (const auto& p : space.points)
    {
        if (info.point_edge.count(p.id))
            continue;
        if (!fat_through(p.position).empty())
            throw InconsistentDataError("GKM point " + p.id + " meets a fat edge");
    }
    return info;
}

std::vector<std::string> fat_edge_components(const SpaceData& space, const FatEdgeInfo& info,
                                             const std::string& edge_id)
{
    const PolytopeEdge* e = info.polytope.edge(edge_id);
    if (!e)
        throw InvalidDataError("unknown edge \"" + edge_id + "\"");
    std::vector<std::string> out;
    for (const auto& [pid, eid] : info.point_edge)
        if (eid == edge_id)
            out.push_back(pid);
    for (const auto& s : space.surfaces)
    {
        if (!info.polytope.on_edge(*e, s.position))
            continue;
        for (const auto& w : s.normal_weights)
            if (same_line(w, e->direction))
            {
                out.push_back(s.id);
                break;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oneskel
