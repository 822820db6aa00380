#include <benchmark/benchmark.h>

#include "causal_beams/figures.hpp"
#include "causal_beams/grid.hpp"
#include "causal_beams/scalar_beams.hpp"

using namespace cb;

namespace {

const SourcePoint kSource{Vec3(0, 0, 1), 1.01};

PointField propagator_at(double t) {
  return [t](const Vec3& x) { return extended_propagator({x, t, kSource}, Causality::retarded); };
}

void BM_SliceParallel(benchmark::State& st) {
  const SliceGrid g = fig3_grid(static_cast<int>(st.range(0)));
  const auto f = propagator_at(1.0);
  for (auto _ : st) benchmark::DoNotOptimize(sample_slice(g, f));
  st.SetItemsProcessed(st.iterations() * g.n1 * g.n3);
}

void BM_SliceSerial(benchmark::State& st) {
  const SliceGrid g = fig3_grid(static_cast<int>(st.range(0)));
  const auto f = propagator_at(1.0);
  for (auto _ : st) benchmark::DoNotOptimize(sample_slice_serial(g, f));
  st.SetItemsProcessed(st.iterations() * g.n1 * g.n3);
}

// Driven beam with a sampled signal: one adaptive quadrature per node.
void BM_SliceSampled(benchmark::State& st) {
  std::vector<double> t, v;
  for (int i = 0; i <= 400; ++i) {
    t.push_back(-4 + 0.02 * i);
    v.push_back(std::exp(-t.back() * t.back()));
  }
  const DrivingSignal s = SampledSignal(t, v);
  const SliceGrid g = fig3_grid(64);
  const PointField f = [&](const Vec3& x) { return driven_beam({x, 1.0, kSource}, s); };
  const bool parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? sample_slice(g, f) : sample_slice_serial(g, f));
  st.SetLabel(parallel ? "parallel" : "serial");
}

void BM_Probe(benchmark::State& st) {
  SpacetimeBump f;
  f.center = Vec3(0.3, 0.1, 1.0);
  f.t0 = f.center.norm();
  f.width_x = f.width_t = 0.4;
  f.compact = true;
  ProbeOptions opt;
  opt.spatial_nodes = 16;
  opt.parallel = st.range(0) != 0;
  for (auto _ : st)
    benchmark::DoNotOptimize(minkowski_limit_probe(f, {Vec3(0, 0, 0.5), 1.0}, {0.1, 0.05}, Causality::retarded, opt));
  st.SetLabel(opt.parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_SliceParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SliceSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SliceSampled)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Probe)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
