#include <doctest.h>

#include "oneskel/errors.hpp"
#include "oneskel/momentdata.hpp"
#include "support.hpp"

using namespace oneskel;

namespace {

// CP^2 with the circle (1,0): two isolated points and the fixed line x = 0.
SpaceData cp2_by_hand()
{
    SpaceData s;
    s.torus_rank = 1;
    s.half_dim = 2;
    s.points = {{"p0", {1}, {{-1}, {-1}}}};
    s.surfaces = {{"s0", 0, {0}, 1, {{1}}, std::vector<Int>{1}}};
    return s;
}

} // namespace

TEST_SUITE("momentdata")
{
    TEST_CASE("fixtures validate")
    {
        for (const char* name : {"cube.json", "cp3.json", "cp2_circle.json", "hirzebruch_a.json", "hirzebruch_b.json",
                                 "hirzebruch_c.json", "b2_eight.json"})
        {
            CAPTURE(name);
            CHECK(validate(testing::load_fixture(name)).ok());
        }
    }

    TEST_CASE("zero weight is reported with its location")
    {
        ValidationReport r = validate(testing::load_fixture("bad_zero_weight.json"));
        REQUIRE(r.has("zero-weight"));
        CHECK(r.violations.front().where == "p1.weights[2]");
        CHECK_THROWS_AS(require_valid(testing::load_fixture("bad_zero_weight.json")), InvalidDataError);
    }

    TEST_CASE("validation rules")
    {
        SpaceData base = cp2_by_hand();
        REQUIRE(validate(base).ok());

        SpaceData s = base;
        s.points[0].weights.pop_back();
        CHECK(validate(s).has("weight-count"));

        s = base;
        s.points[0].weights = {{-2}, {-2}};
        CHECK(validate(s).has("non-effective"));

        s = base;
        s.surfaces[0].id = "p0";
        CHECK(validate(s).has("duplicate-id"));

        s = base;
        s.surfaces[0].genus = -1;
        CHECK(validate(s).has("genus"));

        s = base;
        s.surfaces[0].area = 0;
        CHECK(validate(s).has("area"));

        s = base;
        s.surfaces[0].normal_degrees = std::vector<Int>{1, 2};
        CHECK(validate(s).has("normal-degrees-length"));

        s = base;
        s.torus_rank = 2;
        s.half_dim = 2;
        s.points[0].position = {1, 0};
        s.points[0].weights = {{-1, 0}, {0, 1}};
        s.surfaces[0].position = {0, 0};
        s.surfaces[0].normal_weights = {{1, 0}};
        CHECK(validate(s).has("dimension-bound"));

        s = base;
        s.points[0].position = {1, 2};
        CHECK(validate(s).has("vector-length"));

        s = base;
        s.torus_rank = 3;
        CHECK(validate(s).has("complexity"));
    }

    TEST_CASE("span-rank: weights must span the dual lattice")
    {
        SpaceData s = testing::cp3_space();
        s.points[0].weights = {{1, 0}, {2, 0}, {-1, 0}};
        CHECK(validate(s).has("span-rank"));
    }

    TEST_CASE("light and heavy weights")
    {
        IsolatedPoint gkm{"p", {0, 0}, {{1, 0}, {0, 1}, {1, 1}}};
        CHECK(is_gkm(gkm));

        IsolatedPoint vertex{"p", {0, 0}, {{1, 0}, {0, 1}, {0, 2}}};
        WeightClass wc = classify_weights(vertex);
        CHECK(wc.light_indices() == std::vector<std::size_t>{0});
        CHECK(wc.heavy_indices() == std::vector<std::size_t>{1, 2});
        CHECK(*wc.heavy_ratio == 2);

        IsolatedPoint interior{"p", {0, 0}, {{1, 0}, {0, 1}, {0, -1}}};
        CHECK(*classify_weights(interior).heavy_ratio == -1);
    }

    TEST_CASE("non-GKM placement agrees with the polytope")
    {
        // x-coordinate circle on the trapezoid: (2,0) is a vertex of [0,2], (1,1) lies over its interior
        SpaceData s = testing::hirzebruch_space({{1}, {0}});
        std::size_t at_vertex = 0, inside = 0;
        for (const auto& p : s.points)
        {
            REQUIRE_FALSE(is_gkm(p));
            NonGkmInfo info = check_non_gkm_structure(p, s);
            if (info.placement == NonGkmPlacement::vertex)
            {
                ++at_vertex;
                CHECK(info.lambda == 1);
                CHECK(p.position == RationalVector{2});
            }
            else
            {
                ++inside;
                CHECK(info.lambda == -1);
                CHECK(p.position == RationalVector{1});
            }
        }
        CHECK(at_vertex == 1);
        CHECK(inside == 1);
    }

    TEST_CASE("a vertex placement that is not a vertex is rejected")
    {
        SpaceData s = testing::hirzebruch_space({{1}, {0}});
        for (auto& p : s.points)
            if (p.position == RationalVector{2})
                p.position = {fraction(1, 2)}; // now strictly inside the hull [0, 1]
        for (const auto& p : s.points)
            if (p.position == RationalVector{fraction(1, 2)})
                CHECK_THROWS_AS(check_non_gkm_structure(p, s), StructureError);
    }

    TEST_CASE("genericity")
    {
        SpaceData s = testing::cp3_space();
        CHECK(is_generic({1, 2}, s));
        CHECK_FALSE(is_generic({1, -1}, s));
        CHECK_THROWS_AS(require_generic({1, -1}, s), NotGenericError);
        CHECK(is_generic(find_generic(s), s));
    }

    TEST_CASE("moment polytope of the cube restriction is a unit square")
    {
        MomentPolytope poly = moment_polytope(testing::cube_space());
        CHECK(poly.vertices().size() == 4);
        REQUIRE(poly.edges.size() == 4);
        CHECK(poly.edges[0].id == "e0");
        for (const auto& e : poly.edges)
            CHECK(e.lattice_length == 1);
    }

    TEST_CASE("edge stabilizer")
    {
        MomentPolytope poly = moment_polytope(testing::cube_space());
        StabilizerInfo info = face_stabilizer(poly, edge_face(poly.edges[0]));
        CHECK(info.face_dimension == 1);
        REQUIRE(info.basis.size() == 1);
        CHECK(pair(poly.edges[0].direction, info.basis[0]) == 0);
        CHECK(info.preimage_dimension_bound == 4);
    }

    TEST_CASE("every edge of the cube restriction is fat")
    {
        SpaceData s = testing::cube_space();
        FatEdgeInfo info = fat_edges(s);
        CHECK(info.fat == std::vector<std::string>{"e0", "e1", "e2", "e3"});
        CHECK(fat_edge_components(s, info, "e0") == std::vector<std::string>{"s0", "s1"});
    }

    TEST_CASE("the CP3 restriction has no fat edges")
    {
        CHECK(fat_edges(testing::cp3_space()).fat.empty());
    }

    TEST_CASE("fat edges need complexity one")
    {
        SpaceData toric = toric_fixed_data(testing::unit_cube());
        CHECK_THROWS_AS(fat_edges(toric), StructureError);
    }

    TEST_CASE("a surface normal weight off every edge is inconsistent")
    {
        SpaceData s = testing::cube_space();
        s.surfaces[0].normal_weights[0] = {1, 1};
        CHECK_THROWS_AS(fat_edges(s), InconsistentDataError);
    }
}
