#include <random>

#include <benchmark/benchmark.h>

#include "grasscode/constructions.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/matrix.hpp"
#include "grasscode/rank_metric.hpp"
#include "grasscode/skeleton.hpp"
#include "grasscode/verifier.hpp"

using namespace grasscode;

namespace {

Matrix random_matrix(const Field& f, size_t rows, size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<uint32_t> coeff(0, f.q() - 1);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, coeff(rng));
    return m;
}

} // namespace

static void BM_MatrixRank(benchmark::State& state) {
    Field f(2);
    std::mt19937_64 rng(7);
    auto size = static_cast<size_t>(state.range(0));
    Matrix m = random_matrix(f, size, size, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_MatrixRank)->Arg(16)->Arg(32)->Arg(64);

static void BM_SubspaceDistance(benchmark::State& state) {
    Field f(2);
    std::mt19937_64 rng(11);
    Subspace a = subspace_from_matrix(random_matrix(f, 4, 10, rng));
    Subspace b = subspace_from_matrix(random_matrix(f, 4, 10, rng));
    for (auto _ : state) benchmark::DoNotOptimize(subspace_distance(a, b));
}
BENCHMARK(BM_SubspaceDistance);

static void BM_GabidulinBuild(benchmark::State& state) {
    Field f(2);
    for (auto _ : state) benchmark::DoNotOptimize(gabidulin_mrd(4, 8, 3, f));
}
BENCHMARK(BM_GabidulinBuild);

static void BM_DiagramCode(benchmark::State& state) {
    Field f(2);
    FerrersDiagram fd = FerrersDiagram::from_row_lengths({6, 5, 3});
    for (auto _ : state) benchmark::DoNotOptimize(fdmrd_intersect(fd, 2, f));
}
BENCHMARK(BM_DiagramCode);

static void BM_RankWeight(benchmark::State& state) {
    Field f(2);
    LinearMatrixCode code = gabidulin_mrd(4, 6, 3, f);
    for (auto _ : state) benchmark::DoNotOptimize(rank_weight_enumerate(code));
}
BENCHMARK(BM_RankWeight)->Unit(benchmark::kMillisecond);

static void BM_Construction0(benchmark::State& state) {
    Field f(2);
    auto n = static_cast<size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(construction_0(n, f));
}
BENCHMARK(BM_Construction0)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_ConstructionIa(benchmark::State& state) {
    Field f(2);
    for (auto _ : state) benchmark::DoNotOptimize(construction_Ia(10, 4, f));
}
BENCHMARK(BM_ConstructionIa)->Unit(benchmark::kMillisecond);

static void BM_ConstructionII(benchmark::State& state) {
    Field f(2);
    for (auto _ : state) benchmark::DoNotOptimize(construction_II(13, 4, f));
}
BENCHMARK(BM_ConstructionII)->Unit(benchmark::kMillisecond);

static void BM_StratifiedVerify(benchmark::State& state) {
    Field f(2);
    SubspaceCode code = construction_0(8, f);
    for (auto _ : state) benchmark::DoNotOptimize(verify_stratified(code));
}
BENCHMARK(BM_StratifiedVerify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
