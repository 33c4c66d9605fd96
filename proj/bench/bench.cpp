// Parallel kernels against their single-threaded references. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "bianchi/congruence.hpp"
#include "bianchi/fillpipe.hpp"
#include "bianchi/homcount.hpp"

namespace {

namespace fp = bianchi::fp;

const fp::Presentation& fig8() {
  static const fp::Presentation p = bianchi::fig8_presentation();
  return p;
}

const bianchi::KernelPresentation& kernel() {
  static const bianchi::KernelPresentation k = bianchi::build_kernel_presentation();
  return k;
}

void BM_HomCount(benchmark::State& state) {
  const auto target = fp::FiniteGroup::psl2(7);
  for (auto _ : state) benchmark::DoNotOptimize(fp::hom_count(fig8(), target));
}

void BM_HomCountSerial(benchmark::State& state) {
  const auto target = fp::FiniteGroup::psl2(7);
  for (auto _ : state) benchmark::DoNotOptimize(fp::hom_count_serial(fig8(), target));
}

void BM_EnumerateImage(benchmark::State& state) {
  const auto alpha = bianchi::QuadInt::gaussian(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bianchi::enumerate_image(alpha));
}

void BM_EnumerateImageSerial(benchmark::State& state) {
  const auto alpha = bianchi::QuadInt::gaussian(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bianchi::enumerate_image_serial(alpha));
}

void BM_Audit(benchmark::State& state) {
  const bianchi::CongruenceGroup gamma(bianchi::QuadInt::gaussian(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(audit_short_geodesics(gamma, static_cast<int>(state.range(0))));
}

void BM_AuditSerial(benchmark::State& state) {
  const bianchi::CongruenceGroup gamma(bianchi::QuadInt::gaussian(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(audit_short_geodesics_serial(gamma, static_cast<int>(state.range(0))));
}

void BM_ScanAll(benchmark::State& state) {
  kernel();
  for (auto _ : state) benchmark::DoNotOptimize(bianchi::scan_all(kernel()));
}

void BM_ScanAllSerial(benchmark::State& state) {
  kernel();
  for (auto _ : state) benchmark::DoNotOptimize(bianchi::scan_all_serial(kernel()));
}

}  // namespace

BENCHMARK(BM_HomCount)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HomCountSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateImage)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateImageSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Audit)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AuditSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanAll)->Iterations(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanAllSerial)->Iterations(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
