#include <benchmark/benchmark.h>

#include <random>

#include "covspec/cov_spectrum.hpp"
#include "covspec/families.hpp"
#include "covspec/graph_backend.hpp"
#include "covspec/lattice.hpp"
#include "covspec/todd_coxeter.hpp"
#include "covspec/torus_backend.hpp"

using namespace covspec;

namespace {

Lattice skewed(int n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    rows[i][i] = 1;
    if (i + 1 < n) rows[i][i + 1] = fraction(2, 3);
  }
  return Lattice::from_basis(rows);
}

void BM_EnumerateByNorm(benchmark::State& state) {
  const Lattice lattice = skewed(static_cast<int>(state.range(0)));
  const auto cutoff = LengthValue::rational(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_norm(lattice, cutoff));
}
BENCHMARK(BM_EnumerateByNorm)->DenseRange(2, 6);

void BM_TorusCovSpectrum(benchmark::State& state) {
  const TorusBackend backend(skewed(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(compute_cov_spectrum(backend, backend.default_cutoff()));
}
BENCHMARK(BM_TorusCovSpectrum)->DenseRange(2, 6);

void BM_BouquetCovSpectrum(benchmark::State& state) {
  std::vector<Rational> lengths;
  for (int k = 1; k <= state.range(0); ++k) lengths.push_back(fraction(k + 3, 4));
  const BouquetBackend backend(MetricGraph::bouquet(lengths));
  for (auto _ : state) benchmark::DoNotOptimize(compute_cov_spectrum(backend, backend.default_cutoff(), {false, 16}));
}
BENCHMARK(BM_BouquetCovSpectrum)->RangeMultiplier(2)->Range(2, 32);

void BM_ThetaGraphCovSpectrum(benchmark::State& state) {
  const GraphBackend backend(MetricGraph::theta(1, 2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(compute_cov_spectrum(backend, backend.default_cutoff()));
}
BENCHMARK(BM_ThetaGraphCovSpectrum);

void BM_TodenseFamily(benchmark::State& state) {
  FamilySpec spec = FamilySpec::standard(FamilyName::todense);
  spec.first = spec.last = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family_spectra(spec));
}
BENCHMARK(BM_TodenseFamily)->DenseRange(2, 6, 2);

// Cosets of the trivial subgroup in the symmetric group S_n, Coxeter presentation.
void BM_ToddCoxeterSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p;
  p.generators = n - 1;
  for (int i = 1; i < n; ++i) {
    p.relators.push_back(FreeWord::generator(i).power(2));
    if (i + 1 < n) p.relators.push_back((FreeWord::generator(i) * FreeWord::generator(i + 1)).power(3));
    for (int j = i + 2; j < n; ++j) p.relators.push_back((FreeWord::generator(i) * FreeWord::generator(j)).power(2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cosets(p, {}, 1'000'000));
}
BENCHMARK(BM_ToddCoxeterSymmetric)->DenseRange(3, 6);

}  // namespace
BENCHMARK_MAIN();
