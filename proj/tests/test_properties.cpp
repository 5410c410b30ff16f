#include <doctest.h>

#include <random>

#include "oneskel/homology.hpp"
#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"
#include "oneskel/skeleton.hpp"
#include "oneskel/spacefile.hpp"
#include "support.hpp"

using namespace oneskel;

namespace {

struct Sample
{
    DelzantPolytope polytope;
    IntMatrix iota;
    SpaceData space;
};

std::vector<Sample> samples(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<Sample> out;
    for (int i = 0; i < count; ++i)
    {
        std::size_t dim = 2 + i % 2;
        DelzantPolytope p = testing::random_delzant(rng, dim);
        IntMatrix iota = testing::random_corank_one(rng, dim);
        out.push_back({p, iota, restrict_to_subtorus(p, SubtorusEmbedding(iota))});
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<Int> num(-50, 50), den(1, 20);
    return fraction(num(rng), den(rng));
}

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("toric pairing with omega is the total edge length")
    {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 40; ++i)
        {
            DelzantPolytope p = testing::random_delzant(rng, 2 + i % 2);
            SpaceData toric = toric_fixed_data(p);
            LatticeVector xi = find_generic(toric);
            CHECK(pair_with_cn1(toric, omega_class(toric, xi), xi).value == testing::edge_length_sum(p));
            CHECK(testing::full_torus_omega_pairing(p, xi) == testing::edge_length_sum(p));
        }
    }

    TEST_CASE("restricted data pairs like the full torus")
    {
        for (const auto& s : samples(17, 40))
        {
            CHECK(validate(s.space).ok());
            LatticeVector xi = find_generic(s.space);
            Rational restricted = pair_with_cn1(s.space, omega_class(s.space, xi), xi).value;
            CHECK(restricted == testing::edge_length_sum(s.polytope));
        }
    }

    TEST_CASE("skeleton identities and cardinalities on random restrictions")
    {
        for (const auto& s : samples(29, 40))
        {
            CAPTURE(to_string(s.iota));
            ToricOneSkeleton skel = assemble_skeleton(s.space);
            LatticeVector xi = find_generic(s.space);
            CHECK(verify_skeleton(s.space, skel, default_classes(s.space, xi), xi).ok());
            CHECK(skel.counts.pre == pre_skeleton_formula(s.space));
            CHECK(skel.counts.reduced == reduced_skeleton_formula(s.space));
            // the toric one-skeleton of a toric manifold is its edge set
            CHECK(skel.size() == s.polytope.edges().size());
        }
    }

    TEST_CASE("results do not depend on the generic direction")
    {
        for (const auto& s : samples(41, 30))
        {
            auto dirs = generic_directions(s.space, 5);
            REQUIRE(dirs.size() == 5);
            const LatticeVector& xi0 = dirs.front();
            Rational w0 = pair_with_cn1(s.space, omega_class(s.space, xi0), xi0).value;
            Rational c0 = pair_with_cn1(s.space, c1_class(s.space, xi0), xi0).value;
            std::vector<Int> b0 = betti_numbers(s.space, xi0).betti;
            for (const auto& xi : dirs)
            {
                CHECK(pair_with_cn1(s.space, omega_class(s.space, xi), xi).value == w0);
                CHECK(pair_with_cn1(s.space, c1_class(s.space, xi), xi).value == c0);
                CHECK(betti_numbers(s.space, xi).betti == b0);
            }
        }
    }

    TEST_CASE("Betti profiles are palindromic, even and sum to the Euler characteristic")
    {
        for (const auto& s : samples(53, 40))
        {
            BettiProfile b = betti_numbers(s.space, find_generic(s.space));
            CHECK(b.palindromic());
            CHECK(b.odd_vanish());
            CHECK(b.alternating_sum() == euler_characteristic(s.space));
            Int chi = static_cast<Int>(s.space.points.size() + 2 * s.space.surfaces.size());
            CHECK(b.euler == chi);
            CHECK(chi == static_cast<Int>(s.polytope.vertices().size()));
        }
    }

    TEST_CASE("monotone check reuses the skeleton identity")
    {
        for (const auto& s : samples(67, 30))
        {
            if (s.space.half_dim != 3)
                continue;
            MonotoneReport r = monotone_bound_check(s.space, assemble_skeleton(s.space), find_generic(s.space));
            CHECK(r.skeleton_identity());
            CHECK(r.s1 == 24);
        }
    }

    TEST_CASE("emission is idempotent on random restrictions")
    {
        for (const auto& s : samples(79, 30))
        {
            std::string once = emit_space(s.space);
            CHECK(emit_space(parse_space(once)) == once);
        }
    }

    TEST_CASE("genus-one surfaces contribute exactly their first coefficient")
    {
        std::mt19937_64 rng(97);
        std::uniform_int_distribution<Int> weight(-9, 9);
        std::uniform_int_distribution<int> count(1, 4);
        for (int i = 0; i < 300; ++i)
        {
            SurfaceValue v{random_rational(rng), random_rational(rng)};
            std::vector<Int> w;
            for (int k = count(rng); k > 0; --k)
            {
                Int x = weight(rng);
                w.push_back(x == 0 ? 1 : x);
            }
            CHECK(surface_term(v, 1, w) == v.a);
        }
    }
}
