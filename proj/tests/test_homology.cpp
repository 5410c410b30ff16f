#include <doctest.h>

#include "oneskel/errors.hpp"
#include "oneskel/homology.hpp"
#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"
#include "oneskel/skeleton.hpp"
#include "support.hpp"

using namespace oneskel;

TEST_SUITE("homology")
{
    TEST_CASE("Euler characteristics")
    {
        CHECK(euler_characteristic(testing::load_fixture("cube.json")) == 8);
        CHECK(euler_characteristic(testing::load_fixture("cp3.json")) == 4);
        CHECK(euler_characteristic(testing::load_fixture("cp2_circle.json")) == 3);
        CHECK(euler_characteristic(testing::load_fixture("hirzebruch_b.json")) == 4);
        SpaceData torus_surface = testing::load_fixture("cp2_circle.json");
        torus_surface.surfaces[0].genus = 2;
        CHECK(euler_characteristic(torus_surface) == 1 - 2);
    }

    TEST_CASE("Betti profiles of the fixtures")
    {
        auto profile = [](const char* name) {
            SpaceData s = testing::load_fixture(name);
            return to_string(betti_numbers(s, find_generic(s)));
        };
        CHECK(profile("cube.json") == "1 0 3 0 3 0 1");
        CHECK(profile("cp3.json") == "1 0 1 0 1 0 1");
        CHECK(profile("cp2_circle.json") == "1 0 1 0 1");
        CHECK(profile("hirzebruch_a.json") == "1 0 2 0 1");
        CHECK(profile("b2_eight.json") == "1 0 8 0 8 0 1");
    }

    TEST_CASE("profile helpers")
    {
        SpaceData s = testing::load_fixture("cube.json");
        BettiProfile b = betti_numbers(s, find_generic(s));
        CHECK(b.palindromic());
        CHECK(b.odd_vanish());
        CHECK(b.alternating_sum() == 8);
        CHECK(b.euler == 8);
        CHECK(b.indices.size() == 4);
    }

    TEST_CASE("a genus-one surface contributes odd Betti numbers")
    {
        SpaceData s = testing::load_fixture("cp2_circle.json");
        s.surfaces[0].genus = 1;
        BettiProfile b = betti_numbers(s, find_generic(s));
        CHECK_FALSE(b.odd_vanish());
        CHECK(b.alternating_sum() == euler_characteristic(s));
    }

    TEST_CASE("monotone reports")
    {
        auto report = [](const char* name) {
            SpaceData s = testing::load_fixture(name);
            return monotone_bound_check(s, assemble_skeleton(s), find_generic(s));
        };
        MonotoneReport cube = report("cube.json");
        CHECK(cube.s1 == 24);
        CHECK(cube.b2 == 3);
        CHECK(cube.ok());
        CHECK(cube.summary() == "S1=24 b2=3 bound: b2<=7 OK");

        MonotoneReport cp3 = report("cp3.json");
        CHECK(cp3.s1 == 24);
        CHECK(cp3.b2 == 1);
        CHECK(cp3.ok());

        MonotoneReport eight = report("b2_eight.json");
        CHECK(eight.asserted);
        CHECK(eight.b2 == 8);
        CHECK_FALSE(eight.bound_holds());
        CHECK_FALSE(eight.ok());
        CHECK(eight.summary() == "S1=24 b2=8 bound: VIOLATED (3(1+b2)=27 > 24)");
    }

    TEST_CASE("an unflagged space is not held to the bound")
    {
        SpaceData s = testing::load_fixture("b2_eight.json");
        s.flags.monotone = false;
        MonotoneReport r = monotone_bound_check(s, assemble_skeleton(s), find_generic(s));
        CHECK(r.ok());
        CHECK(r.summary() == "S1=24 b2=8 bound: not checked (data not flagged monotone)");
    }

    TEST_CASE("the monotone check is six-dimensional")
    {
        SpaceData s = testing::load_fixture("cp2_circle.json");
        CHECK_THROWS_AS(monotone_bound_check(s, assemble_skeleton(s), find_generic(s)), WrongDimensionError);
    }
}
