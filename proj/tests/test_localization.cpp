#include <doctest.h>

#include "oneskel/errors.hpp"
#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"
#include "support.hpp"

using namespace oneskel;

namespace {

Rational pairing(const SpaceData& s, bool c1, const LatticeVector& xi)
{
    EqClass2 mu = c1 ? c1_class(s, xi) : omega_class(s, xi);
    return pair_with_cn1(s, mu, xi).value;
}

Rational pairing(const SpaceData& s, bool c1)
{
    return pairing(s, c1, find_generic(s));
}

} // namespace

TEST_SUITE("localization")
{
    TEST_CASE("point and surface terms")
    {
        IsolatedPoint p{"p", {0, 0}, {{1, 0}, {0, 1}, {1, 1}}};
        EqClass2 mu;
        mu.point_values["p"] = 6;
        // 6 * (1/1 + 1/2 + 1/3) at xi = (1,2)
        CHECK(point_contribution(p, mu, {1, 2}) == 11);

        std::vector<Int> w{2, -3};
        CHECK(surface_term({5, 6}, 0, w) == 5 + 2 * 6 * (fraction(1, 2) - fraction(1, 3)));
        CHECK(surface_term({5, 6}, 2, w) == 5 - 2 * 6 * (fraction(1, 2) - fraction(1, 3)));
        CHECK_THROWS_AS(surface_term({1, 1}, 0, std::vector<Int>{0}), NotGenericError);
    }

    TEST_CASE("sphere integral")
    {
        CHECK(integrate_sphere(3, 1, {2, 0}, {1, 5}) == 1);
        CHECK(integrate_sphere(0, 4, {0, -1}, {3, 2}) == 2);
        CHECK_THROWS_AS(integrate_sphere(0, 1, {1, -1}, {1, 1}), NotGenericError);
    }

    TEST_CASE("cube restriction: omega pairs to 12 and c1 to 24")
    {
        // classical ring of (CP1)^3: c = prod (1 + 2 x_i), so int omega c2 = 4 (a + b + c) and int c1 c2 = 24
        SpaceData s = testing::load_fixture("cube.json");
        CHECK(pairing(s, false) == 4 * 3);
        CHECK(pairing(s, true) == 24);
    }

    TEST_CASE("boxes of any size follow the (CP1)^3 ring")
    {
        for (Int a = 1; a <= 3; ++a)
            for (Int b = 1; b <= 3; ++b)
                for (Int c = 1; c <= 3; ++c)
                {
                    SpaceData s = restrict_to_subtorus(make_box({a, b, c}), SubtorusEmbedding({{1, 0}, {0, 1}, {1, 1}}));
                    CHECK(pairing(s, false) == 4 * (a + b + c));
                    CHECK(pairing(s, true) == 24);
                }
    }

    TEST_CASE("CP3 restriction: omega pairs to 6 and c1 to 24")
    {
        // c(CP3) = (1 + H)^4: c2 = 6 H^2, c1 = 4 H
        SpaceData s = testing::load_fixture("cp3.json");
        CHECK(pairing(s, false) == 6);
        CHECK(pairing(s, true) == 24);
        for (Int size = 1; size <= 4; ++size)
        {
            SpaceData t = restrict_to_subtorus(make_simplex(3, size), SubtorusEmbedding({{1, 0}, {0, 1}, {1, 1}}));
            CHECK(pairing(t, false) == 6 * size);
        }
    }

    TEST_CASE("four-dimensional fixtures")
    {
        // in dimension four c_{n-1} = c1: int omega c1 is the lattice perimeter, int c1^2 = 12 - chi
        SpaceData cp2 = testing::load_fixture("cp2_circle.json");
        CHECK(pairing(cp2, false) == 3);
        CHECK(pairing(cp2, true) == 9);
        for (const char* name : {"hirzebruch_a.json", "hirzebruch_b.json", "hirzebruch_c.json"})
        {
            CAPTURE(name);
            SpaceData h = testing::load_fixture(name);
            CHECK(pairing(h, false) == testing::edge_length_sum(testing::hirzebruch_trapezoid()));
            CHECK(pairing(h, true) == 8);
        }
    }

    TEST_CASE("breakdown is ordered by component id and sums to the value")
    {
        SpaceData s = testing::load_fixture("hirzebruch_b.json");
        LatticeVector xi = find_generic(s);
        PairingResult r = pair_with_cn1(s, omega_class(s, xi), xi);
        Rational sum = 0;
        std::string last;
        for (const auto& [id, v] : r.breakdown)
        {
            CHECK(last < id);
            last = id;
            sum += v;
        }
        CHECK(sum == r.value);
        CHECK(r.breakdown.size() == s.points.size() + s.surfaces.size());
    }

    TEST_CASE("c1 needs normal degrees")
    {
        SpaceData s = testing::load_fixture("cube.json");
        s.surfaces[2].normal_degrees.reset();
        CHECK_THROWS_AS(c1_class(s, find_generic(s)), MissingDegreesError);
        CHECK_NOTHROW(omega_class(s, find_generic(s)));
    }

    TEST_CASE("a non-generic direction names the weight")
    {
        SpaceData s = testing::load_fixture("cp3.json");
        try
        {
            omega_class(s, {1, -1});
            FAIL("expected NotGenericError");
        }
        catch (const NotGenericError& e)
        {
            CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
        }
    }

    TEST_CASE("a class missing a component is rejected")
    {
        SpaceData s = testing::load_fixture("cp3.json");
        LatticeVector xi = find_generic(s);
        EqClass2 mu = omega_class(s, xi);
        mu.point_values.erase("p0");
        CHECK_THROWS_AS(pair_with_cn1(s, mu, xi), InvalidDataError);
    }

    TEST_CASE("pairing is linear in the class")
    {
        SpaceData s = testing::load_fixture("cube.json");
        LatticeVector xi = find_generic(s);
        EqClass2 w = omega_class(s, xi);
        EqClass2 c = c1_class(s, xi);
        CHECK(pair_with_cn1(s, w + c, xi).value == pair_with_cn1(s, w, xi).value + pair_with_cn1(s, c, xi).value);
    }
}
