#include <benchmark/benchmark.h>

#include "cpt/cptgroup.hpp"
#include "cpt/lorentzrep.hpp"

namespace {

void BM_BuildBasis(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cpt::GeneratorSet g = cpt::build_brauer_weyl(m);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_BuildBasis)->Arg(2)->Arg(4)->Arg(6);

void BM_MatMul(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  cpt::GeneratorSet g = cpt::build_brauer_weyl(m);
  for (auto _ : state) {
    cpt::ExactMatrix p = g.gen(1) * g.gen(m + 1);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(6);

void BM_Septet(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  cpt::GeneratorSet g = cpt::reference_basis(m);
  for (auto _ : state) {
    cpt::AutomorphismSeptet s = cpt::compute_septet(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Septet)->Arg(2)->Arg(3)->Arg(4);

void BM_FullPipeline(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cpt::GeneratorSet g = cpt::reference_basis(m);
    cpt::AutomorphismSeptet s = cpt::compute_septet(g);
    cpt::CptGroup grp = cpt::generate_group(g, s);
    benchmark::DoNotOptimize(grp);
  }
}
BENCHMARK(BM_FullPipeline)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GnRep(benchmark::State& state) {
  for (auto _ : state) {
    cpt::GNRep rep = cpt::build_gn_rep(cpt::Rational(1, 2), cpt::Rational(5, 2));
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_GnRep);

void BM_LorentzRelations(benchmark::State& state) {
  cpt::GNRep rep = cpt::build_gn_rep(cpt::Rational(1, 2), cpt::Rational(5, 2));
  for (auto _ : state) {
    cpt::RelationReport r = cpt::verify_lorentz_relations(rep);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LorentzRelations);

}  // namespace
