#include "hlb/harness.hpp"
#include "hlb/interpolation.hpp"
#include "hlb/rng.hpp"

#include <benchmark/benchmark.h>

using namespace hlb;

namespace {

void BM_lambda_profile(benchmark::State& state) {
    const Degree m(static_cast<int>(state.range(0)));
    const PExponent p(Rational(4 * state.range(0) + 1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(lambda_profile(m, p));
}
BENCHMARK(BM_lambda_profile)->Arg(3)->Arg(8);

void BM_profile_weights_interpolate(benchmark::State& state) {
    const Degree m(static_cast<int>(state.range(0)));
    const ExponentFamily family = canonical_family(m);
    const PExponent p(3 * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(interpolate(family, profile_weights(m, p)));
}
BENCHMARK(BM_profile_weights_interpolate)->Arg(3)->Arg(8);

void BM_solve_weights(benchmark::State& state) {
    const Degree m(static_cast<int>(state.range(0)));
    const ExponentFamily family = canonical_family(m);
    const MultipleExponent target = interpolate(family, profile_weights(m, PExponent(3 * state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(solve_weights(target, family));
}
BENCHMARK(BM_solve_weights)->Arg(3)->Arg(8);

void BM_bound_yhb(benchmark::State& state) {
    const Degree m(5);
    const PExponent p(Rational(77, 2));
    for (auto _ : state) benchmark::DoNotOptimize(bound_yhb(m, p, ScalarField::Real));
}
BENCHMARK(BM_bound_yhb);

void BM_mixed_norm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CoefficientTensor T = random_form(Degree(3), n, Distribution::Gaussian,
                                            ScalarField::Real, 99);
    const std::vector<double> q{1.2, 1.5, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(mixed_norm(T, q));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(T.size()));
}
BENCHMARK(BM_mixed_norm)->Arg(8)->Arg(20);

void BM_evaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CoefficientTensor T = random_form(Degree(3), n, Distribution::Gaussian,
                                            ScalarField::Real, 7);
    PointTuple x;
    SplitMix64 rng(3);
    for (int i = 0; i < 3; ++i) {
        std::vector<Complex> v(static_cast<std::size_t>(n));
        for (auto& c : v) c = Complex(rng.gaussian(), 0.0);
        x.x.push_back(std::move(v));
    }
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(T, x));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(T.size()));
}
BENCHMARK(BM_evaluate)->Arg(8)->Arg(20);

void BM_alternating_norm(benchmark::State& state) {
    const CoefficientTensor T = random_form(Degree(2), static_cast<int>(state.range(0)),
                                            Distribution::Gaussian, ScalarField::Real, 31);
    for (auto _ : state)
        benchmark::DoNotOptimize(alternating_norm(T, PExponent(4), 5, 11));
}
BENCHMARK(BM_alternating_norm)->Arg(6)->Arg(12);

void BM_vertex_norm(benchmark::State& state) {
    const CoefficientTensor T = random_form(Degree(2), static_cast<int>(state.range(0)),
                                            Distribution::Rademacher, ScalarField::Real, 47);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_norm_linf(T));
}
BENCHMARK(BM_vertex_norm)->Arg(8)->Arg(12);

void BM_random_form(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_form(Degree(3), 16, Distribution::Gaussian,
                                             ScalarField::Complex, ++seed));
}
BENCHMARK(BM_random_form);

}  // namespace

BENCHMARK_MAIN();
