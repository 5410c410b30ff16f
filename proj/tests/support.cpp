#include "support.hpp"

#include <algorithm>

#include "oneskel/errors.hpp"
#include "oneskel/lattice.hpp"
#include "oneskel/spacefile.hpp"

namespace testing {

std::string fixture_path(const std::string& name)
{
    return std::string(ONESKEL_FIXTURES) + "/" + name;
}

SpaceData load_fixture(const std::string& name)
{
    return load_space(fixture_path(name));
}

DelzantPolytope unit_cube()
{
    return make_box({1, 1, 1});
}

DelzantPolytope hirzebruch_trapezoid()
{
    return DelzantPolytope::from_vertices({{0, 0}, {2, 0}, {1, 1}, {0, 1}}, 2);
}

SpaceData cube_space()
{
    return restrict_to_subtorus(unit_cube(), SubtorusEmbedding({{1, 0}, {0, 1}, {0, 0}}));
}

SpaceData cp3_space()
{
    return restrict_to_subtorus(make_simplex(3, 1), SubtorusEmbedding({{1, 0}, {0, 1}, {1, 1}}));
}

SpaceData cp2_space()
{
    return restrict_to_subtorus(make_simplex(2, 1), SubtorusEmbedding({{1}, {0}}));
}

SpaceData hirzebruch_space(const IntMatrix& iota)
{
    return restrict_to_subtorus(hirzebruch_trapezoid(), SubtorusEmbedding(iota));
}

SpaceData b2_eight_space()
{
    DelzantPolytope p = make_box({6, 6, 6});
    const std::vector<RationalVector> corners{{0, 0, 0}, {6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {6, 6, 0}};
    for (const auto& c : corners)
        p = truncate_vertex(p, *p.hull().vertex_index(c), 1);
    SpaceData space = restrict_to_subtorus(p, SubtorusEmbedding({{1, 0}, {0, 1}, {1, 2}}));
    space.flags.monotone = true;
    return space;
}

Rational edge_length_sum(const DelzantPolytope& p)
{
    Rational sum = 0;
    for (const auto& e : p.edges())
        sum += e.lattice_length;
    return sum;
}

Rational full_torus_omega_pairing(const DelzantPolytope& p, const LatticeVector& xi)
{
    Rational total = 0;
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
    {
        Rational height = 0;
        for (std::size_t i = 0; i < p.dim(); ++i)
            height += p.vertices()[v][i] * xi[i];
        Rational inverse_sum = 0;
        for (const auto& u : p.directions_at(v))
        {
            Int w = 0;
            for (std::size_t i = 0; i < p.dim(); ++i)
                w += u[i] * xi[i];
            inverse_sum += Rational(1) / Rational(w);
        }
        total += -height * inverse_sum;
    }
    return total;
}

DelzantPolytope random_delzant(std::mt19937_64& rng, std::size_t dim)
{
    std::uniform_int_distribution<Int> side(1, 6);
    std::uniform_int_distribution<int> coin(0, 2);
    DelzantPolytope p = make_box(std::vector<Int>(dim, 1));
    switch (coin(rng))
    {
    case 0: {
        std::vector<Int> sides;
        for (std::size_t i = 0; i < dim; ++i)
            sides.push_back(side(rng));
        p = make_box(sides);
        break;
    }
    case 1:
        p = make_simplex(dim, side(rng));
        break;
    default:
        if (dim == 2)
            p = make_product(make_box({side(rng)}), make_box({side(rng)}));
        else
            p = make_product(make_simplex(2, side(rng)), make_box({side(rng)}));
        break;
    }
    std::uniform_int_distribution<int> cuts(0, 3);
    for (int c = cuts(rng); c > 0; --c)
    {
        std::uniform_int_distribution<std::size_t> pick(0, p.vertices().size() - 1);
        std::uniform_int_distribution<Int> depth(1, 2);
        try
        {
            p = truncate_vertex(p, pick(rng), depth(rng));
        }
        catch (const InvalidDataError&)
        {
            // cut too deep for this vertex; keep the polytope as is
        }
    }
    return p;
}

IntMatrix random_corank_one(std::mt19937_64& rng, std::size_t m)
{
    std::uniform_int_distribution<Int> entry(-2, 2);
    while (true)
    {
        IntMatrix iota(m, m - 1);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c + 1 < m; ++c)
                iota(r, c) = entry(rng);
        std::vector<LatticeVector> rows;
        for (std::size_t r = 0; r < m; ++r)
            rows.push_back(iota.row(r));
        if (span_index(rows, m - 1) == 1)
            return iota;
    }
}

} // namespace testing
