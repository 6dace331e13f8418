#include <benchmark/benchmark.h>

#include <random>

#include "steinerlab/pipeline.hpp"

using namespace steinerlab;

namespace {

Matrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, Scalar(static_cast<long>(rng() % static_cast<unsigned long>(f.p))));
    return m;
}

void bench_rref_f5(benchmark::State& state) {
    std::mt19937_64 rng(7);
    FieldSpec f5 = FieldSpec::prime(5);
    Matrix m = random_matrix(f5, static_cast<std::size_t>(state.range(0)),
                             static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void bench_rref_q(benchmark::State& state) {
    std::mt19937_64 rng(7);
    Matrix m(FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)),
             static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.set(i, j, Scalar(static_cast<long>(rng() % 19) - 9));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void bench_contract_line(benchmark::State& state) {
    SteinerDatum dq = reduce_datum_mod(binary_mult_datum(3, 3, FieldSpec::rationals()), 5);
    MatrixSpace image = dq.image();
    auto points = projective_points(5, dq.s);
    for (auto _ : state)
        for (const auto& s0 : points) benchmark::DoNotOptimize(contract_line(image, s0));
}

void bench_enumerate_locus(benchmark::State& state) {
    SteinerDatum dq = reduce_datum_mod(binary_mult_datum(2, 2, FieldSpec::rationals()),
                                       state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_locus(dq, state.range(0)));
}

void bench_tangent_dimension(benchmark::State& state) {
    SteinerDatum dq = reduce_datum_mod(binary_mult_datum(2, 2, FieldSpec::rationals()), 5);
    JumpingPair pair = enumerate_locus(dq, 5).sample_pairs.front();
    for (auto _ : state) benchmark::DoNotOptimize(tangent_dimension(dq, pair));
}

void bench_pipeline_binary12(benchmark::State& state) {
    PipelineConfig cfg;
    cfg.family = "binary";
    cfg.a = 1;
    cfg.n = 2;
    cfg.primes = {2, 3, 5};
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(cfg));
}

BENCHMARK(bench_rref_f5)->Arg(16)->Arg(64);
BENCHMARK(bench_rref_q)->Arg(16)->Arg(32);
BENCHMARK(bench_contract_line);
BENCHMARK(bench_enumerate_locus)->Arg(5)->Arg(11);
BENCHMARK(bench_tangent_dimension);
BENCHMARK(bench_pipeline_binary12);

}  // namespace

BENCHMARK_MAIN();
