// Serial reference vs OpenMP kernels on an MNIST-shaped batch.
//
//   ./build/bench/trev_bench --benchmark_filter=gradients

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "trev/kernels.hpp"
#include "trev/noise.hpp"
#include "trev/training.hpp"

namespace {

using namespace trev;

struct Fixture {
  Matrix features;
  std::vector<int> labels;
  std::vector<std::size_t> indices;
  Mlp model;
  CorrectedLoss loss;

  explicit Fixture(std::size_t n)
      : features(n, 784),
        labels(n),
        indices(n),
        model(ModelConfig{{256}, Activation::relu, true}.build(784, 10, 1)),
        loss(LossKind::reweight, build_symmetric(0.5, 10).matrix()) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : features.data()) v = u(rng);
    for (int& y : labels) y = static_cast<int>(rng() % 10);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
  }

  BatchView view() const { return {features, indices, labels}; }
};

template <auto Kernel>
void gradients(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.model, f.view(), f.loss, true));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void predict(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.model, f.features));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(gradients<serial::batch_gradients>)->Name("serial/gradients")->Arg(128)->Arg(1024);
BENCHMARK(gradients<parallel::batch_gradients>)->Name("parallel/gradients")->Arg(128)->Arg(1024);
BENCHMARK(predict<serial::predict_proba>)->Name("serial/predict")->Arg(2048);
BENCHMARK(predict<parallel::predict_proba>)->Name("parallel/predict")->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
