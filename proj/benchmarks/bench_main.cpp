#include <benchmark/benchmark.h>

#include "xchannel/alignment.hpp"
#include "xchannel/det_channel.hpp"
#include "xchannel/qary.hpp"
#include "xchannel/rng.hpp"

using namespace xchan;

namespace {

Gf2Field f2;

void BM_BitMatrixRank(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n);
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng.next() & 1) m.set(r, c, true);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_BitMatrixRank)->Arg(64)->Arg(192);

void BM_PackBoxes(benchmark::State& state) {
    int nd = static_cast<int>(state.range(0));
    int nc = (3 * nd) / 4;
    while (nc % 3 != 0 || 4 * nc < 3 * nd) ++nc;
    auto d = cyclic_decompose(nd, nc);
    for (auto _ : state) benchmark::DoNotOptimize(pack_boxes(d, f2).boxes.size());
}
BENCHMARK(BM_PackBoxes)->Arg(16)->Arg(60);

void BM_BuildScheme(benchmark::State& state) {
    int nd = static_cast<int>(state.range(0));
    int nc = nd - 2;  // lands in the extended aligned regime
    for (auto _ : state) benchmark::DoNotOptimize(build_scheme(nc, nd, f2).sum_rate());
}
BENCHMARK(BM_BuildScheme)->Arg(15)->Arg(40);

void BM_ValidateScheme(benchmark::State& state) {
    int nd = static_cast<int>(state.range(0));
    int nc = (nd * 7) / 10;
    auto p = SymDetParams{nc, nd}.to_det();
    auto s = build_scheme(nc, nd, f2);
    for (auto _ : state) benchmark::DoNotOptimize(validate_linear_scheme(p, s, f2).valid);
}
BENCHMARK(BM_ValidateScheme)->Arg(15)->Arg(40);

void BM_Roundtrip(benchmark::State& state) {
    auto p = SymDetParams{12, 15}.to_det();
    auto s = build_scheme(12, 15, f2);
    DetCodec<Gf2Field> codec(p, s, f2);
    SplitMix64 rng(3);
    for (auto _ : state) {
        auto m = codec.random_messages(rng);
        benchmark::DoNotOptimize(messages_equal(codec.roundtrip(m), m));
    }
}
BENCHMARK(BM_Roundtrip);

void BM_CapacitySweep(benchmark::State& state) {
    int max_nd = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rational acc(0);
        for (int nd = 1; nd <= max_nd; ++nd)
            for (int nc = 0; nc <= 2 * nd; ++nc) acc = acc + sym_sum_capacity({nc, nd}).value;
        benchmark::DoNotOptimize(acc.num());
    }
}
BENCHMARK(BM_CapacitySweep)->Arg(50);

void BM_MonteCarloTrials(benchmark::State& state) {
    auto cfg = QaryConfig::make(100, 1, 3, 4, Rational(0), 0, true);
    PrimeFieldCtx fp(cfg.p);
    auto s = build_scheme(3, 4, fp);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto rep = run_monte_carlo(cfg, s, 1000, ++seed);
        benchmark::DoNotOptimize(rep.level_errors[0]);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_MonteCarloTrials);

}  // namespace

BENCHMARK_MAIN();
