#include <benchmark/benchmark.h>

#include "ordo/learn/pipeline.hpp"
#include "ordo/learn/preprocess.hpp"
#include "ordo/learn/svm.hpp"
#include "ordo/synthetic.hpp"

using namespace ordo;

namespace {

void BM_MutualInformation(benchmark::State& state) {
  const auto data = synthetic::planted_dataset(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(learn::mutual_information_scores(data.X, data.y));
}
BENCHMARK(BM_MutualInformation)->Arg(200)->Arg(1000);

void BM_Pca(benchmark::State& state) {
  const auto data = synthetic::planted_dataset(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(learn::fit_pca(data.X, 10));
}
BENCHMARK(BM_Pca)->Arg(200)->Arg(1000);

// arg: kernel (0 linear, 1 rbf)
void BM_SvmTrain(benchmark::State& state) {
  const auto data = synthetic::planted_dataset(200, 1);
  const auto std = learn::fit_standardizer(data.X);
  const auto X = learn::apply_standardizer(std, data.X);
  learn::SvmParams p;
  p.kernel = state.range(0) == 0 ? learn::KernelKind::Linear : learn::KernelKind::Rbf;
  for (auto _ : state) benchmark::DoNotOptimize(learn::train_svm(X, data.y, p));
}
BENCHMARK(BM_SvmTrain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CrossValidate(benchmark::State& state) {
  const auto data = synthetic::planted_dataset(200, 1);
  learn::PipelineParams p;
  p.pca_k = 10;
  for (auto _ : state) benchmark::DoNotOptimize(learn::cross_validate(data.X, data.y, p, 5, 1));
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);

}  // namespace
