#include <doctest.h>

#include "oneskel/errors.hpp"
#include "oneskel/momentdata.hpp"
#include "oneskel/toric.hpp"
#include "support.hpp"

using namespace oneskel;

TEST_SUITE("toric")
{
    TEST_CASE("generators are Delzant")
    {
        CHECK(delzant_check(make_box({2, 3})).ok);
        CHECK(delzant_check(make_simplex(3, 2)).ok);
        CHECK(delzant_check(make_product(make_simplex(2, 1), make_box({4}))).ok);
        CHECK(delzant_check(testing::hirzebruch_trapezoid()).ok);
        CHECK(make_product(make_simplex(2, 1), make_box({4})).vertices().size() == 6);
    }

    TEST_CASE("a non-unimodular corner is named")
    {
        DelzantPolytope p = DelzantPolytope::from_vertices({{0, 0}, {1, 0}, {0, 2}}, 2);
        // at (1,0) the edge directions (-1,0) and (-1,2) span an index-2 sublattice
        DelzantCheck c = delzant_check(p);
        CHECK_FALSE(c.ok);
        REQUIRE(c.witness.has_value());
        CHECK(p.vertices()[*c.witness] == RationalVector{1, 0});
        CHECK_THROWS_AS(require_delzant(p), NotDelzantError);
    }

    TEST_CASE("a pyramid is not simple")
    {
        CHECK_THROWS_AS(DelzantPolytope::from_vertices({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}}, 3),
                        NotSimpleError);
    }

    TEST_CASE("truncation replaces a vertex by a facet")
    {
        DelzantPolytope p = truncate_vertex(make_box({3, 3, 3}), 0, 1);
        CHECK(p.vertices().size() == 10);
        CHECK(delzant_check(p).ok);
        CHECK_THROWS_AS(truncate_vertex(make_box({1, 1}), 0, 1), InvalidDataError);
    }

    TEST_CASE("monotone polytopes")
    {
        CHECK(is_monotone(make_box({2, 2, 2})));
        CHECK(is_monotone(make_simplex(3, 4)));
        CHECK_FALSE(is_monotone(make_box({1, 2})));
        CHECK_FALSE(is_monotone(testing::hirzebruch_trapezoid()));
    }

    TEST_CASE("toric fixed data")
    {
        SpaceData s = toric_fixed_data(make_simplex(3, 1));
        CHECK(s.complexity() == 0);
        CHECK(s.points.size() == 4);
        REQUIRE(s.pairings.has_value());
        CHECK(s.pairings->size() == 6);
        CHECK(validate(s).ok());
        CHECK(polytope_of(s).vertices() == make_simplex(3, 1).vertices());
    }

    TEST_CASE("subtorus embeddings")
    {
        SubtorusEmbedding emb({{1, 0}, {0, 1}, {1, 1}});
        CHECK(emb.surjective());
        CHECK(emb.restrict(DualWeight{1, 2, 3}) == DualWeight{4, 5});
        CHECK_FALSE(SubtorusEmbedding({{2}, {0}}).surjective());
        CHECK_THROWS_AS(SubtorusEmbedding({{1, 2}, {2, 4}}), DimensionError);
    }

    TEST_CASE("restriction of the cube: four fixed spheres at the square's corners")
    {
        SpaceData s = testing::cube_space();
        CHECK(s.points.empty());
        REQUIRE(s.surfaces.size() == 4);
        for (const auto& surf : s.surfaces)
        {
            CHECK(surf.genus == 0);
            CHECK(surf.area == 1);
            REQUIRE(surf.normal_degrees.has_value());
            CHECK(*surf.normal_degrees == std::vector<Int>{0, 0});
        }
        CHECK(s.fat_edge_extensions.size() == 4);
        CHECK(s.flags.monotone == true);
    }

    TEST_CASE("restriction of CP3 stays GKM")
    {
        SpaceData s = testing::cp3_space();
        CHECK(s.surfaces.empty());
        CHECK(s.points.size() == 4);
        for (const auto& p : s.points)
            CHECK(is_gkm(p));
        CHECK(s.fat_edge_extensions.empty());
    }

    TEST_CASE("restriction of CP2 to a circle")
    {
        SpaceData s = testing::cp2_space();
        REQUIRE(s.points.size() == 1);
        REQUIRE(s.surfaces.size() == 1);
        CHECK(s.surfaces[0].area == 1);
        CHECK(*s.surfaces[0].normal_degrees == std::vector<Int>{1});
        CHECK(s.points[0].weights == std::vector<DualWeight>{{-1}, {-1}});
    }

    TEST_CASE("restriction rejects a non-surjective subtorus")
    {
        CHECK_THROWS_AS(restrict_to_subtorus(make_box({1, 1}), SubtorusEmbedding({{2}, {0}})), NonEffectiveError);
    }

    TEST_CASE("normalizing the circle to (0,1) keeps lattice lengths")
    {
        DelzantPolytope p = testing::hirzebruch_trapezoid();
        DelzantPolytope q = normalize_polytope(p, {1, 1});
        CHECK(delzant_check(q).ok);
        CHECK(testing::edge_length_sum(q) == testing::edge_length_sum(p));
    }

    TEST_CASE("circle action on the Hirzebruch surface by its fibre circle")
    {
        CircleRestriction r = circle_restriction_4d(testing::hirzebruch_trapezoid(), {0, 1});
        // two horizontal edges are fixed spheres, at the bottom and top
        REQUIRE(r.fixed_spheres.size() == 2);
        CHECK(r.fixed_spheres[0].minimum != r.fixed_spheres[1].minimum);
        CHECK(r.points.empty());
        CHECK(r.spheres.size() == 2);
    }

    TEST_CASE("edge slopes")
    {
        DelzantPolytope p = testing::hirzebruch_trapezoid();
        std::size_t vertical = 0, slanted = 0;
        for (std::size_t e = 0; e < p.edges().size(); ++e)
        {
            if (p.edges()[e].direction[1] == 0)
                continue;
            EdgeSlope s = edge_slope(p, e);
            CHECK(s.k == 1);
            CHECK(p.vertices()[s.lower][1] < p.vertices()[s.upper][1]);
            if (s.b)
                ++slanted;
            else
                ++vertical;
        }
        CHECK(vertical == 1);
        CHECK(slanted == 1);
    }
}
