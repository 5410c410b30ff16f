#include "oneskel/toric.hpp"

#include <algorithm>

#include "oneskel/errors.hpp"
#include "oneskel/momentdata.hpp"

namespace oneskel {

namespace {

RationalVector shifted(const RationalVector& x, Int t, const LatticeVector& u)
{
    RationalVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += Rational(t) * u[i];
    return out;
}

RationalVector difference(const RationalVector& a, const RationalVector& b)
{
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Int exact_multiple(const LatticeVector& v, const LatticeVector& unit)
{
    auto r = ratio(v, unit);
    if (!r || !is_integer(*r))
        throw InternalError(to_string(v) + " is not an integer multiple of " + to_string(unit));
    return to_int(boost::multiprecision::numerator(*r));
}

std::size_t index_in(const std::vector<std::size_t>& list, std::size_t x)
{
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), x) - list.begin());
}

} // namespace

DelzantPolytope DelzantPolytope::from_vertices(const std::vector<RationalVector>& points, std::size_t dim)
{
    DelzantPolytope p;
    p.hull_ = ConvexHull::of(points, dim);
    const auto& verts = p.hull_.vertices();
    p.incident_.resize(verts.size());
    for (std::size_t k = 0; k < p.hull_.edges().size(); ++k)
    {
        auto [a, b] = p.hull_.edges()[k];
        RationalVector diff = difference(verts[b], verts[a]);
        DelzantEdge e;
        e.from = a;
        e.to = b;
        e.direction = primitive_direction(diff);
        for (std::size_t i = 0; i < dim; ++i)
            if (e.direction[i] != 0)
            {
                e.lattice_length = diff[i] / e.direction[i];
                break;
            }
        p.edges_.push_back(std::move(e));
        p.incident_[a].push_back(k);
        p.incident_[b].push_back(k);
    }
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (p.incident_[v].size() != dim)
            throw NotSimpleError("vertex " + to_string(verts[v]) + " has " + std::to_string(p.incident_[v].size())
                                 + " edges in dimension " + std::to_string(dim));
    return p;
}

std::size_t DelzantPolytope::other_end(std::size_t e, std::size_t v) const
{
    return edges_[e].from == v ? edges_[e].to : edges_[e].from;
}

LatticeVector DelzantPolytope::direction_from(std::size_t e, std::size_t v) const
{
    return edges_[e].from == v ? edges_[e].direction : -edges_[e].direction;
}

std::vector<LatticeVector> DelzantPolytope::directions_at(std::size_t v) const
{
    std::vector<LatticeVector> out;
    for (std::size_t e : incident_[v])
        out.push_back(direction_from(e, v));
    return out;
}

DelzantCheck delzant_check(const DelzantPolytope& p)
{
    DelzantCheck check;
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
    {
        auto dirs = p.directions_at(v);
        BigInt det = IntMatrix::from_columns(dirs, p.dim()).determinant();
        if (det != 1 && det != -1)
        {
            check.ok = false;
            check.witness = v;
            return check;
        }
    }
    return check;
}

void require_delzant(const DelzantPolytope& p)
{
    DelzantCheck check = delzant_check(p);
    if (!check.ok)
        throw NotDelzantError("edge directions at vertex " + to_string(p.vertices()[*check.witness])
                              + " do not form a lattice basis");
}

bool is_monotone(const DelzantPolytope& p)
{
    // offset_f - <n_f, c> = lambda for every facet f; unknowns (c, lambda)
    const std::size_t m = p.dim();
    std::vector<RationalVector> rows;
    for (const auto& f : p.hull().facets())
    {
        RationalVector row(m + 2);
        for (std::size_t i = 0; i < m; ++i)
            row[i] = f.normal[i];
        row[m] = 1;
        row[m + 1] = f.offset;
        rows.push_back(std::move(row));
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c <= m && r < rows.size(); ++c)
    {
        std::size_t k = r;
        while (k < rows.size() && rows[k][c] == 0)
            ++k;
        if (k == rows.size())
            continue;
        std::swap(rows[k], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < m + 2; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][m + 1] != 0)
            return false;
    // facet normals span, so c and lambda are determined
    if (pivots.size() != m + 1)
        return false;
    return rows[m][m + 1] / rows[m][m] > 0;
}

SpaceData toric_fixed_data(const DelzantPolytope& p)
{
    require_delzant(p);
    SpaceData space;
    space.torus_rank = p.dim();
    space.half_dim = p.dim();
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        space.points.push_back({"p" + std::to_string(v), p.vertices()[v], p.directions_at(v)});

    std::vector<Pairing> pairings;
    for (std::size_t e = 0; e < p.edges().size(); ++e)
    {
        const auto& edge = p.edges()[e];
        pairings.push_back({{"p" + std::to_string(edge.from), index_in(p.incident(edge.from), e)},
                            {"p" + std::to_string(edge.to), index_in(p.incident(edge.to), e)}});
    }
    space.pairings = std::move(pairings);
    return space;
}

DelzantPolytope polytope_of(const SpaceData& toric)
{
    if (toric.complexity() != 0 || !toric.surfaces.empty())
        throw InvalidDataError("expected complexity-zero data with isolated fixed points only");
    return DelzantPolytope::from_vertices(toric.positions(), toric.torus_rank);
}

SubtorusEmbedding::SubtorusEmbedding(IntMatrix iota) : iota_(std::move(iota)), transpose_(iota_.transpose())
{
    std::vector<LatticeVector> cols;
    for (std::size_t c = 0; c < iota_.cols(); ++c)
        cols.push_back(iota_.column(c));
    if (iota_.cols() == 0 || iota_.cols() > iota_.rows() || oneskel::rank(cols, iota_.rows()) != iota_.cols())
        throw DimensionError("subtorus matrix " + to_string(iota_) + " does not have full column rank");
}

bool SubtorusEmbedding::surjective() const
{
    std::vector<LatticeVector> images;
    for (std::size_t r = 0; r < iota_.rows(); ++r)
        images.push_back(iota_.row(r));
    return span_index(images, rank()) == 1;
}

SpaceData restrict_to_subtorus(const DelzantPolytope& p, const SubtorusEmbedding& emb)
{
    require_delzant(p);
    const std::size_t m = p.dim();
    if (emb.ambient_rank() != m || emb.rank() + 1 != m)
        throw DimensionError("need an embedding of a rank-" + std::to_string(m - 1) + " subtorus into T^"
                             + std::to_string(m) + ", got a " + std::to_string(emb.ambient_rank()) + "x"
                             + std::to_string(emb.rank()) + " matrix");
    if (!emb.surjective())
        throw NonEffectiveError("restricted weights span a proper sublattice; the subtorus "
                                + to_string(emb.matrix()) + " does not act effectively");

    const auto& verts = p.vertices();
    const auto& edges = p.edges();

    SpaceData space;
    space.torus_rank = m - 1;
    space.half_dim = m;

    std::vector<std::string> component(verts.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
        const auto& edge = edges[e];
        if (!emb.restrict(edge.direction).is_zero())
            continue;

        FixedSurface s;
        s.id = "s" + std::to_string(space.surfaces.size());
        s.genus = 0;
        s.position = emb.restrict(verts[edge.from]);
        s.area = edge.lattice_length;

        const LatticeVector& u = edge.direction;
        std::vector<DualWeight> far_side;
        for (std::size_t f : p.incident(edge.to))
            if (f != e)
                far_side.push_back(emb.restrict(p.direction_from(f, edge.to)));

        std::vector<Int> degrees;
        for (std::size_t f : p.incident(edge.from))
        {
            if (f == e)
                continue;
            LatticeVector w = p.direction_from(f, edge.from);
            s.normal_weights.push_back(emb.restrict(w));
            // the edge at the far end lying in the 2-face spanned by u and w is w - A u
            std::optional<Int> degree;
            for (std::size_t g : p.incident(edge.to))
            {
                if (g == e)
                    continue;
                LatticeVector diff = p.direction_from(g, edge.to) - w;
                if (diff.is_zero())
                    degree = 0;
                else if (parallel(diff, u))
                    degree = -exact_multiple(diff, u);
                if (degree)
                    break;
            }
            if (!degree)
                throw InternalError("no matching edge across killed edge " + std::to_string(e));
            degrees.push_back(*degree);
        }
        auto near_side = s.normal_weights;
        std::sort(near_side.begin(), near_side.end());
        std::sort(far_side.begin(), far_side.end());
        if (near_side != far_side)
            throw InternalError("normal weights disagree at the two ends of killed edge " + std::to_string(e));
        s.normal_degrees = std::move(degrees);

        component[edge.from] = s.id;
        component[edge.to] = s.id;
        space.surfaces.push_back(std::move(s));
    }

    for (std::size_t v = 0; v < verts.size(); ++v)
    {
        if (!component[v].empty())
            continue;
        IsolatedPoint pt;
        pt.id = "p" + std::to_string(space.points.size());
        pt.position = emb.restrict(verts[v]);
        for (const auto& w : p.directions_at(v))
            pt.weights.push_back(emb.restrict(w));
        component[v] = pt.id;
        space.points.push_back(std::move(pt));
    }

    std::vector<Pairing> pairings;
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
        const auto& edge = edges[e];
        const auto* a = space.find_point(component[edge.from]);
        const auto* b = space.find_point(component[edge.to]);
        if (!a || !b)
            continue;
        std::size_t ia = index_in(p.incident(edge.from), e);
        std::size_t ib = index_in(p.incident(edge.to), e);
        if (classify_weights(*a).tags[ia] == WeightTag::light && classify_weights(*b).tags[ib] == WeightTag::light)
            pairings.push_back({{a->id, ia}, {b->id, ib}});
    }
    space.pairings = std::move(pairings);
    space.flags.monotone = is_monotone(p);

    // The preimage of an edge of the image is a face of p; it is a fat edge
    // exactly when that face is two-dimensional.
    MomentPolytope image = moment_polytope(space);
    for (const auto& qe : image.edges)
    {
        std::vector<std::size_t> face;
        for (std::size_t v = 0; v < verts.size(); ++v)
            if (image.on_edge(qe, emb.restrict(verts[v])))
                face.push_back(v);
        std::vector<RationalVector> face_points;
        for (std::size_t v : face)
            face_points.push_back(verts[v]);
        if (affine_rank(face_points) != 2)
            continue;

        const std::size_t v0 = face.front();
        std::vector<LatticeVector> basis;
        for (std::size_t f : p.incident(v0))
            if (std::find(face.begin(), face.end(), p.other_end(f, v0)) != face.end())
                basis.push_back(p.direction_from(f, v0));
        if (basis.size() != 2)
            throw InternalError("two-face over edge " + qe.id + " has " + std::to_string(basis.size())
                                + " edges at a vertex");

        const LatticeVector& alpha = qe.direction;
        Int c1 = exact_multiple(emb.restrict(basis[0]), alpha);
        Int c2 = exact_multiple(emb.restrict(basis[1]), alpha);
        ExtendedGcd eg = extended_gcd(c1, c2);
        if (eg.g != 1)
            throw InternalError("two-face over edge " + qe.id + " does not map onto a primitive segment");
        LatticeVector w = eg.x * basis[0] + eg.y * basis[1]; // restricts to alpha
        LatticeVector u = c2 * basis[0] - c1 * basis[1];     // restricts to zero

        auto minor = [&](std::size_t r, std::size_t s) { return w[r] * u[s] - w[s] * u[r]; };
        std::size_t i = m, j = m;
        for (std::size_t r = 0; r < m && i == m; ++r)
            for (std::size_t s = r + 1; s < m && i == m; ++s)
                if (minor(r, s) != 0)
                {
                    i = r;
                    j = s;
                }
        if (i == m)
            throw InternalError("degenerate two-face basis over edge " + qe.id);
        const Rational det = minor(i, j);

        FatEdgeExtension ext;
        ext.edge_id = qe.id;
        ext.circle = LatticeVector{0, 1};
        for (std::size_t v : face)
        {
            RationalVector dx = difference(verts[v], verts[v0]);
            Rational a = (dx[i] * u[j] - dx[j] * u[i]) / det;
            Rational b = (w[i] * dx[j] - w[j] * dx[i]) / det;
            ext.polytope.push_back({b, a});
            ext.component_map.push_back({{b, a}, component[v]});
        }
        Rational min_b = ext.polytope.front()[0], min_a = ext.polytope.front()[1];
        for (const auto& x : ext.polytope)
        {
            min_b = std::min(min_b, x[0]);
            min_a = std::min(min_a, x[1]);
        }
        for (auto& x : ext.polytope)
            x = {x[0] - min_b, x[1] - min_a};
        for (auto& cm : ext.component_map)
            cm.vertex = {cm.vertex[0] - min_b, cm.vertex[1] - min_a};
        std::sort(ext.polytope.begin(), ext.polytope.end());
        std::sort(ext.component_map.begin(), ext.component_map.end(),
                  [](const ExtensionVertex& x, const ExtensionVertex& y) { return x.vertex < y.vertex; });
        space.fat_edge_extensions.push_back(std::move(ext));
    }
    return space;
}

SpaceData restrict_to_subtorus(const SpaceData& toric, const SubtorusEmbedding& emb)
{
    return restrict_to_subtorus(polytope_of(toric), emb);
}

EdgeSlope edge_slope(const DelzantPolytope& p, std::size_t e)
{
    if (p.dim() != 2)
        throw DimensionError("edge slopes need a planar polytope");
    const auto& edge = p.edges()[e];
    if (edge.direction[1] == 0)
        throw InvalidDataError("edge " + std::to_string(e) + " is horizontal");
    EdgeSlope slope;
    const bool up = edge.direction[1] > 0;
    slope.lower = up ? edge.from : edge.to;
    slope.upper = up ? edge.to : edge.from;
    LatticeVector rise = p.direction_from(e, slope.lower);
    slope.k = rise[1];
    if (rise[0] != 0)
        slope.b = rise[0] < 0 ? -rise[0] : rise[0];
    slope.sign = (rise[0] > 0) - (rise[0] < 0);
    return slope;
}

DelzantPolytope normalize_polytope(const DelzantPolytope& p, const LatticeVector& circle)
{
    if (p.dim() != 2)
        throw DimensionError("normalization needs a planar polytope");
    UnimodularMap map = complete_to_unimodular(circle);
    std::vector<RationalVector> moved;
    for (const auto& v : p.vertices())
        moved.push_back(map.apply_dual(v));
    return DelzantPolytope::from_vertices(moved, 2);
}

CircleRestriction circle_restriction_4d(const DelzantPolytope& p, const LatticeVector& circle)
{
    CircleRestriction out{normalize_polytope(p, circle), {}, {}, {}};
    const DelzantPolytope& q = out.polytope;
    require_delzant(q);

    Rational lo = q.vertices().front()[1], hi = lo;
    for (const auto& v : q.vertices())
    {
        lo = std::min(lo, v[1]);
        hi = std::max(hi, v[1]);
    }

    std::vector<bool> on_fixed_sphere(q.vertices().size(), false);
    for (std::size_t e = 0; e < q.edges().size(); ++e)
    {
        const auto& edge = q.edges()[e];
        if (edge.direction[1] == 0)
        {
            Rational h = q.vertices()[edge.from][1];
            out.fixed_spheres.push_back({e, h, h == lo, h == hi});
            on_fixed_sphere[edge.from] = on_fixed_sphere[edge.to] = true;
        }
        else
            out.spheres.push_back({e, edge_slope(q, e)});
    }
    for (std::size_t v = 0; v < q.vertices().size(); ++v)
    {
        if (on_fixed_sphere[v])
            continue;
        CircleFixedPoint pt{v, q.vertices()[v][1], {}};
        for (const auto& d : q.directions_at(v))
            pt.weights.push_back(d[1]);
        out.points.push_back(std::move(pt));
    }
    return out;
}

DelzantPolytope make_box(const std::vector<Int>& sides)
{
    if (sides.empty())
        throw DimensionError("box needs at least one side");
    for (Int s : sides)
        if (s <= 0)
            throw InvalidDataError("box sides must be positive");
    const std::size_t dim = sides.size();
    std::vector<RationalVector> points;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask)
    {
        RationalVector x(dim);
        for (std::size_t i = 0; i < dim; ++i)
            x[i] = (mask >> i) & 1 ? sides[i] : 0;
        points.push_back(std::move(x));
    }
    return DelzantPolytope::from_vertices(points, dim);
}

DelzantPolytope make_simplex(std::size_t dim, Int size)
{
    if (dim == 0)
        throw DimensionError("simplex needs positive dimension");
    if (size <= 0)
        throw InvalidDataError("simplex size must be positive");
    std::vector<RationalVector> points{RationalVector(dim)};
    for (std::size_t i = 0; i < dim; ++i)
    {
        RationalVector x(dim);
        x[i] = size;
        points.push_back(std::move(x));
    }
    return DelzantPolytope::from_vertices(points, dim);
}

DelzantPolytope make_product(const DelzantPolytope& a, const DelzantPolytope& b)
{
    std::vector<RationalVector> points;
    for (const auto& x : a.vertices())
        for (const auto& y : b.vertices())
        {
            RationalVector z = x;
            z.insert(z.end(), y.begin(), y.end());
            points.push_back(std::move(z));
        }
    return DelzantPolytope::from_vertices(points, a.dim() + b.dim());
}

DelzantPolytope truncate_vertex(const DelzantPolytope& p, std::size_t v, Int t)
{
    require_delzant(p);
    if (v >= p.vertices().size())
        throw InvalidDataError("no vertex " + std::to_string(v));
    if (t <= 0)
        throw InvalidDataError("truncation depth must be positive");

    auto dirs = p.directions_at(v);
    UnimodularMap basis(IntMatrix::from_columns(dirs, p.dim()));
    LatticeVector normal = basis.inverse().transpose() * LatticeVector(std::vector<Int>(p.dim(), 1));

    std::vector<RationalVector> points;
    for (std::size_t w = 0; w < p.vertices().size(); ++w)
    {
        if (w == v)
            continue;
        if (pair(difference(p.vertices()[w], p.vertices()[v]), normal) <= t)
            throw InvalidDataError("truncation at depth " + std::to_string(t) + " reaches vertex "
                                   + to_string(p.vertices()[w]));
        points.push_back(p.vertices()[w]);
    }
    for (const auto& u : dirs)
        points.push_back(shifted(p.vertices()[v], t, u));
    return DelzantPolytope::from_vertices(points, p.dim());
}

} // namespace oneskel
