// Microbenchmarks for the hot paths: lattice normal forms, membership over
// windows, symbolic and traced closures, profile evaluation, and the finite
// topology sweeps.

#include <benchmark/benchmark.h>

#include <random>

#include <conetop/fintop.hpp>
#include <conetop/profile.hpp>

using namespace conetop;

namespace {

Mat random_mat(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

MonoidPtr wedge() {
  GroupSpec g{2, {}};
  return make_monoid(generated_monoid(g, {element(g, {1, 0}), element(g, {1, 1})}));
}

void bm_smith_normal_form(benchmark::State& state) {
  Mat m = random_mat(int(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_smith_normal_form)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void bm_member_window(benchmark::State& state) {
  MonoidPtr m = wedge();
  WindowPoints w(m->group(), int(state.range(0)));
  for (auto _ : state) {
    long hits = 0;
    for (const GroupElement& x : w.points()) hits += m->member(x);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(long(state.iterations()) * long(w.size()));
}
BENCHMARK(bm_member_window)->Arg(4)->Arg(8)->Arg(16);

void bm_lex_member_window(benchmark::State& state) {
  MonoidPtr m = make_monoid(lex_monoid(2));
  WindowPoints w(m->group(), 8);
  for (auto _ : state) {
    long hits = 0;
    for (const GroupElement& x : w.points()) hits += m->member(x);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(long(state.iterations()) * long(w.size()));
}
BENCHMARK(bm_lex_member_window);

void bm_symbolic_closure(benchmark::State& state) {
  MonoidPtr m = wedge();
  ConeSpace sp{m, Variant::cone};
  const GroupSpec& g = m->group();
  DescribedSet a{{Atom{AtomKind::point, element(g, {1, -2})},
                  Atom{AtomKind::plus_monoid, element(g, {0, 2})},
                  Atom{AtomKind::minus_monoid, element(g, {-1, 0})}}};
  for (auto _ : state) benchmark::DoNotOptimize(closure(sp, a));
}
BENCHMARK(bm_symbolic_closure);

void bm_trace_closure(benchmark::State& state) {
  MonoidPtr m = wedge();
  ConeSpace sp{m, Variant::cone};
  WindowPoints w(m->group(), int(state.range(0)));
  std::vector<char> flags(w.size(), 0);
  for (size_t i = 0; i < w.size(); i += 7) flags[i] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(window_trace_closure(sp, w, flags));
}
BENCHMARK(bm_trace_closure)->Arg(4)->Arg(8);

void bm_evaluate_profile(benchmark::State& state) {
  MonoidPtr m = wedge();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(ConeSpace{m, Variant::cone}));
    benchmark::DoNotOptimize(evaluate(ConeSpace{m, Variant::cone_star}));
  }
}
BENCHMARK(bm_evaluate_profile);

void bm_verify_transversal(benchmark::State& state) {
  GroupSpec g{2, {}};
  MonoidPtr m = make_monoid(
      generated_monoid(g, {element(g, {2, 0}), element(g, {-2, 0}), element(g, {0, 3}),
                           element(g, {0, -3})}));
  ConeSpace sp{m, Variant::cone};
  Certificate c = *make_transversal(sp);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify(sp, c, Window{int(state.range(0))}, default_prefix));
}
BENCHMARK(bm_verify_transversal)->Arg(8)->Arg(16);

void bm_enumerate_topologies(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(int(state.range(0))));
}
BENCHMARK(bm_enumerate_topologies)->Arg(3)->Arg(4);

void bm_verify_lemmas(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemmas(int(state.range(0))));
}
BENCHMARK(bm_verify_lemmas)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
