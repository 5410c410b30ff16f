#include "oneskel/hull.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "oneskel/errors.hpp"

namespace oneskel {

namespace {

using RationalMatrix = std::vector<RationalVector>;

std::size_t rational_rank(RationalMatrix m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c)
    {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i)
        {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Rational rational_det(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c)
        {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i)
        {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// Generalized cross product of dim-1 vectors in R^dim.
RationalVector normal_of(const RationalMatrix& spans, std::size_t dim)
{
    RationalVector n(dim);
    for (std::size_t j = 0; j < dim; ++j)
    {
        RationalMatrix minor;
        minor.reserve(spans.size());
        for (const auto& row : spans)
        {
            RationalVector r;
            r.reserve(dim - 1);
            for (std::size_t c = 0; c < dim; ++c)
                if (c != j)
                    r.push_back(row[c]);
            minor.push_back(std::move(r));
        }
        Rational d = rational_det(std::move(minor));
        n[j] = (j % 2 == 0) ? d : Rational(-d);
    }
    return n;
}

std::size_t lattice_rank_of_normals(const std::vector<Facet>& facets, const std::vector<std::size_t>& which,
                                    std::size_t dim)
{
    std::vector<LatticeVector> normals;
    normals.reserve(which.size());
    for (std::size_t f : which)
        normals.push_back(facets[f].normal);
    return rank(normals, dim);
}

} // namespace

std::size_t affine_rank(const std::vector<RationalVector>& points)
{
    if (points.size() < 2)
        return 0;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
    {
        RationalVector d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return rational_rank(std::move(diffs));
}

ConvexHull ConvexHull::of(const std::vector<RationalVector>& input, std::size_t dim)
{
    for (const auto& p : input)
        if (p.size() != dim)
            throw DimensionError("hull: point " + to_string(p) + " in dimension " + std::to_string(dim));

    std::vector<RationalVector> points = input;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    if (dim == 0 || points.empty() || affine_rank(points) < dim)
        throw DegenerateHullError("positions do not span a " + std::to_string(dim)
                                  + "-dimensional polytope");

    ConvexHull hull;
    hull.dim_ = dim;

    // enumerate dim-subsets by index combination
    std::vector<std::size_t> idx(dim);
    for (std::size_t i = 0; i < dim; ++i)
        idx[i] = i;
    std::set<std::pair<LatticeVector, Rational>> seen;
    const std::size_t n = points.size();
    while (true)
    {
        RationalMatrix spans;
        for (std::size_t i = 1; i < dim; ++i)
        {
            RationalVector d(dim);
            for (std::size_t j = 0; j < dim; ++j)
                d[j] = points[idx[i]][j] - points[idx[0]][j];
            spans.push_back(std::move(d));
        }
        RationalVector nrm = normal_of(spans, dim);
        if (std::any_of(nrm.begin(), nrm.end(), [](const Rational& q) { return q != 0; }))
        {
            LatticeVector normal = primitive_direction(nrm);
            Rational offset = pair(points[idx[0]], normal);
            bool below = true, above = true;
            for (const auto& p : points)
            {
                Rational v = pair(p, normal);
                if (v > offset)
                    below = false;
                if (v < offset)
                    above = false;
            }
            if (below != above)
            {
                if (above)
                {
                    normal = -normal;
                    offset = -offset;
                }
                if (seen.insert({normal, offset}).second)
                    hull.facets_.push_back({normal, offset});
            }
        }

        // next combination
        std::size_t i = dim;
        while (i > 0 && idx[i - 1] == n - dim + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < dim; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    std::sort(hull.facets_.begin(), hull.facets_.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });

    for (const auto& p : points)
    {
        std::vector<std::size_t> tight = hull.tight_facets(p);
        if (lattice_rank_of_normals(hull.facets_, tight, dim) == dim)
        {
            hull.vertices_.push_back(p);
            hull.vertex_facets_.push_back(std::move(tight));
        }
    }

    for (std::size_t a = 0; a < hull.vertices_.size(); ++a)
    {
        for (std::size_t b = a + 1; b < hull.vertices_.size(); ++b)
        {
            std::vector<std::size_t> common;
            std::set_intersection(hull.vertex_facets_[a].begin(), hull.vertex_facets_[a].end(),
                                  hull.vertex_facets_[b].begin(), hull.vertex_facets_[b].end(),
                                  std::back_inserter(common));
            if (lattice_rank_of_normals(hull.facets_, common, dim) != dim - 1)
                continue;
            // the face cut out by `common` is an edge only if no third vertex lies on it
            bool third = false;
            for (std::size_t c = 0; c < hull.vertices_.size() && !third; ++c)
            {
                if (c == a || c == b)
                    continue;
                third = std::includes(hull.vertex_facets_[c].begin(), hull.vertex_facets_[c].end(), common.begin(),
                                      common.end());
            }
            if (!third)
                hull.edges_.emplace_back(a, b);
        }
    }
    return hull;
}

bool ConvexHull::contains(const RationalVector& x) const
{
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return pair(x, f.normal) <= f.offset; });
}

std::vector<std::size_t> ConvexHull::tight_facets(const RationalVector& x) const
{
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facets_.size(); ++f)
        if (pair(x, facets_[f].normal) == facets_[f].offset)
            out.push_back(f);
    return out;
}

std::size_t ConvexHull::face_dimension(const RationalVector& x) const
{
    return dim_ - lattice_rank_of_normals(facets_, tight_facets(x), dim_);
}

std::vector<std::size_t> ConvexHull::face_vertices(const RationalVector& x) const
{
    std::vector<std::size_t> tight = tight_facets(x);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (std::includes(vertex_facets_[v].begin(), vertex_facets_[v].end(), tight.begin(), tight.end()))
            out.push_back(v);
    return out;
}

std::optional<std::size_t> ConvexHull::vertex_index(const RationalVector& x) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it != vertices_.end() && *it == x)
        return static_cast<std::size_t>(it - vertices_.begin());
    return std::nullopt;
}

std::optional<std::size_t> ConvexHull::edge_through(const RationalVector& x) const
{
    if (!contains(x) || face_dimension(x) != 1)
        return std::nullopt;
    std::vector<std::size_t> verts = face_vertices(x);
    if (verts.size() != 2)
        return std::nullopt;
    auto it = std::find(edges_.begin(), edges_.end(), std::make_pair(verts[0], verts[1]));
    if (it == edges_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> ConvexHull::incident_edges(std::size_t v) const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].first == v || edges_[e].second == v)
            out.push_back(e);
    return out;
}

} // namespace oneskel
