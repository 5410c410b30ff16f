#include <benchmark/benchmark.h>

#include "oneskel/homology.hpp"
#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"
#include "oneskel/skeleton.hpp"
#include "oneskel/spacefile.hpp"
#include "oneskel/toric.hpp"

using namespace oneskel;

namespace {

DelzantPolytope truncated_box(Int side, int cuts)
{
    const std::vector<RationalVector> corners{{0, 0, 0}, {side, 0, 0}, {0, side, 0}, {0, 0, side},
                                              {side, side, 0}, {side, 0, side}};
    DelzantPolytope p = make_box({side, side, side});
    for (int i = 0; i < cuts; ++i)
        p = truncate_vertex(p, *p.hull().vertex_index(corners.at(i)), 1);
    return p;
}

SpaceData restricted(Int side, int cuts)
{
    return restrict_to_subtorus(truncated_box(side, cuts), SubtorusEmbedding({{1, 0}, {0, 1}, {1, 2}}));
}

void BM_Restrict(benchmark::State& state)
{
    DelzantPolytope p = truncated_box(8, static_cast<int>(state.range(0)));
    SubtorusEmbedding emb({{1, 0}, {0, 1}, {1, 2}});
    for (auto _ : state)
        benchmark::DoNotOptimize(restrict_to_subtorus(p, emb));
}
BENCHMARK(BM_Restrict)->Arg(0)->Arg(2)->Arg(4);

void BM_PairOmega(benchmark::State& state)
{
    SpaceData s = restricted(8, static_cast<int>(state.range(0)));
    LatticeVector xi = find_generic(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_with_cn1(s, omega_class(s, xi), xi));
}
BENCHMARK(BM_PairOmega)->Arg(0)->Arg(2)->Arg(4);

void BM_AssembleSkeleton(benchmark::State& state)
{
    SpaceData s = restricted(8, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_skeleton(s));
}
BENCHMARK(BM_AssembleSkeleton)->Arg(0)->Arg(2)->Arg(4);

void BM_VerifySkeleton(benchmark::State& state)
{
    SpaceData s = restricted(8, 2);
    ToricOneSkeleton skel = assemble_skeleton(s);
    LatticeVector xi = find_generic(s);
    auto classes = default_classes(s, xi);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_skeleton(s, skel, classes, xi));
}
BENCHMARK(BM_VerifySkeleton);

void BM_Betti(benchmark::State& state)
{
    SpaceData s = restricted(8, 4);
    LatticeVector xi = find_generic(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_numbers(s, xi));
}
BENCHMARK(BM_Betti);

void BM_EmitParse(benchmark::State& state)
{
    SpaceData s = restricted(8, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_space(emit_space(s)));
}
BENCHMARK(BM_EmitParse);

} // namespace
BENCHMARK_MAIN();
