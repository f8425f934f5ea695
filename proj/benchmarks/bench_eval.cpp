// Microbenchmarks for the two evaluation shapes and the iterative reference
// solver. Tensor generation runs once up front; the loops time evaluation only.

#include <benchmark/benchmark.h>

#include <cmath>

#include "p2e/coeff_generator.hpp"
#include "p2e/oracle.hpp"
#include "p2e/series_eval.hpp"

namespace {

using p2e::Bounds;
using p2e::CoeffGenerator;
using p2e::DenseTensor;
using p2e::EllipseParams;
using p2e::Evaluator;
using p2e::Form;
using p2e::Quantity;
using p2e::QueryPoint;
using p2e::Truncation;

const Evaluator& evaluator() {
  static const Evaluator ev = [] {
    CoeffGenerator gen;
    Bounds b{8, 8, 9};
    auto dense = [&](Quantity q, Form f) { return DenseTensor(gen.tensor(q, f, b)); };
    return Evaluator(Evaluator::TensorSet{dense(Quantity::phi, Form::sinpow), dense(Quantity::h, Form::sinpow),
                                          dense(Quantity::sin, Form::sinpow), dense(Quantity::cos, Form::sinpow),
                                          dense(Quantity::phi, Form::fourier), dense(Quantity::h, Form::fourier),
                                          dense(Quantity::sin, Form::fourier), dense(Quantity::cos, Form::fourier)});
  }();
  return ev;
}

constexpr EllipseParams kEll{1.0, 0.0066943799901413165};
constexpr QueryPoint kPt{0.9822659459113885, 0.6047628657394372};  // psi ~ 31.6deg, varrho ~ 0.867

Truncation trunc_from_state(const benchmark::State& state) {
  return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), static_cast<int>(state.range(2))};
}

void BM_phi_sinpow(benchmark::State& state) {
  const Evaluator& ev = evaluator();
  Truncation tr = trunc_from_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(ev.eval_phi(kPt, kEll, tr, Form::sinpow));
}

void BM_phi_fourier(benchmark::State& state) {
  const Evaluator& ev = evaluator();
  Truncation tr = trunc_from_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(ev.eval_phi(kPt, kEll, tr, Form::fourier));
}

void BM_h_sinpow(benchmark::State& state) {
  const Evaluator& ev = evaluator();
  Truncation tr = trunc_from_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(ev.eval_h(kPt, kEll, tr, Form::sinpow));
}

void BM_sincos_joint(benchmark::State& state) {
  const Evaluator& ev = evaluator();
  Truncation tr = trunc_from_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(ev.eval_sincos_joint(kPt, kEll, tr));
}

void BM_full_projection(benchmark::State& state) {
  const Evaluator& ev = evaluator();
  Truncation tr = trunc_from_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(ev.project(kPt, kEll, tr, Form::sinpow));
}

void BM_oracle_newton(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(p2e::solve_phi(kPt, kEll));
}

void depth_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 8, 9})->Args({4, 4, 5})->Args({4, 8, 9})->Args({8, 8, 9});
}

BENCHMARK(BM_phi_sinpow)->Apply(depth_args);
BENCHMARK(BM_phi_fourier)->Apply(depth_args);
BENCHMARK(BM_h_sinpow)->Apply(depth_args);
BENCHMARK(BM_sincos_joint)->Apply(depth_args);
BENCHMARK(BM_full_projection)->Apply(depth_args);
BENCHMARK(BM_oracle_newton);

}  // namespace

BENCHMARK_MAIN();
