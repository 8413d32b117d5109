#include <benchmark/benchmark.h>

#include <qring/patterns.hpp>
#include <qring/qmatrix.hpp>
#include <qring/strata.hpp>

using namespace qring;

namespace {

// Straightening a scrambled degree-6 word in the 3x3 quantum matrix algebra;
// exercises the rewrite engine with diagonal corrections.
void BM_normal_form_3x3_word(benchmark::State& state) {
    auto m = preset_quantum_matrices(3);
    const Word word = {8, 2, 4, 0, 6, 4};
    const Scalar one = Scalar::one(m->params());
    for (auto _ : state) {
        benchmark::DoNotOptimize(m->normalize(word, one));
    }
}
BENCHMARK(BM_normal_form_3x3_word);

void BM_qdet(benchmark::State& state) {
    auto m = preset_quantum_matrices(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdet(m));
    }
}
BENCHMARK(BM_qdet)->Arg(3)->Arg(4);

// Comultiplication of the 2x2 determinant, including the tensor-square build.
void BM_delta_of_qdet_2x2(benchmark::State& state) {
    auto m = preset_quantum_matrices(2);
    auto d = qdet(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta(d));
    }
}
BENCHMARK(BM_delta_of_qdet_2x2);

// Center lattices of all 2^6 strata of the six-variable quantum affine space.
void BM_strata_report_n6(benchmark::State& state) {
    auto spec = CommutationSpec::single_parameter(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata_report(spec));
    }
}
BENCHMARK(BM_strata_report_n6);

// Exhaustive closure-pattern scan over the 2^16 subsets of the 4x4 grid.
void BM_enumerate_star_4(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_star(4));
    }
}
BENCHMARK(BM_enumerate_star_4);

}  // namespace

BENCHMARK_MAIN();
