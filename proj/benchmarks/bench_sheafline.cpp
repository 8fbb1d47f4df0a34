#include <benchmark/benchmark.h>

#include <sheafline/sheafline.hpp>

#include <random>
#include <vector>

using namespace sheafline;

namespace {

std::vector<Mat<LaurentPoly<Fp>>> split_inputs(int size, int count) {
    std::mt19937 rng(0xb3ac4);
    std::vector<Mat<LaurentPoly<Fp>>> out;
    for (int i = 0; i < count; ++i)
        out.push_back(selftest::detail::random_unimodular(rng, size, 7));
    return out;
}

void bench_birkhoff_split(benchmark::State& state) {
    auto inputs = split_inputs(static_cast<int>(state.range(0)), 32);
    size_t i = 0;
    for (auto _ : state) {
        auto s = birkhoff_split(inputs[i++ % inputs.size()]);
        benchmark::DoNotOptimize(s.type);
    }
}
BENCHMARK(bench_birkhoff_split)->Arg(3)->Arg(4);

void bench_cartan_canonical_235(benchmark::State& state) {
    std::vector<RationalPoint<Rat>> pts = {RationalPoint<Rat>::finite(Rat(0)),
                                           RationalPoint<Rat>::finite(Rat(1)),
                                           RationalPoint<Rat>::infinity()};
    for (auto _ : state) {
        auto c = cartan(canonical<Rat>({2, 3, 5}, pts));
        benchmark::DoNotOptimize(c.a);
    }
}
BENCHMARK(bench_cartan_canonical_235);

void bench_tube_hom(benchmark::State& state) {
    auto a = TubeLabel::make(6, 1, 9);
    auto b = TubeLabel::make(6, 4, 11);
    for (auto _ : state) {
        int h = tube_hom(a, b);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bench_tube_hom);

void bench_pencil_decompose(benchmark::State& state) {
    auto p = ClosedPoint<Rat>::finite(parse_poly<Rat>("y^2+1", "y", FieldTag{0}));
    auto rep = rep_direct_sum(rep_of_label(KroneckerLabel<Rat>::preproj(3)),
                              rep_of_label(KroneckerLabel<Rat>::regular(p, 2)));
    for (auto _ : state) {
        auto parts = pencil_decompose(rep);
        benchmark::DoNotOptimize(parts.size());
    }
}
BENCHMARK(bench_pencil_decompose);

void bench_weights_equiv_f5(benchmark::State& state) {
    auto pt = [](long long v) { return RationalPoint<Fp>::finite(Fp(v, 5)); };
    auto w1 = WeightFunction<Fp>::make({{pt(0), 2}, {pt(1), 3}, {pt(2), 2}, {pt(3), 5}});
    auto w2 = WeightFunction<Fp>::make(
        {{pt(4), 2}, {RationalPoint<Fp>::infinity(), 3}, {pt(1), 2}, {pt(2), 5}});
    for (auto _ : state) {
        auto s = weights_equivalent(w1, w2, Fp(0, 5));
        benchmark::DoNotOptimize(s.has_value());
    }
}
BENCHMARK(bench_weights_equiv_f5);

} // namespace

BENCHMARK_MAIN();
