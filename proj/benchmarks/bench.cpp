#include <benchmark/benchmark.h>

#include <string>

#include "gammaq/composition.hpp"
#include "gammaq/formats.hpp"
#include "gammaq/harness.hpp"
#include "gammaq/operator_semigroup.hpp"

namespace {

  using namespace gammaq;

  GammaSemigroup load(std::string const& name) {
    return parse_gsem(read_file(std::string(GAMMAQ_BENCH_DATA_DIR) + "/" + name + ".gsem"));
  }

  void compose_mod16(benchmark::State& state) {
    auto g  = load("mod16");
    auto mu = full_characteristic(g, QSet::generated(1));
    for (auto _ : state) {
      benchmark::DoNotOptimize(compose(g, mu, mu));
    }
  }
  BENCHMARK(compose_mod16);

  void build_operators(benchmark::State& state) {
    auto g = load(state.range(0) == 0 ? "mod16" : "mod4mul");
    for (auto _ : state) {
      benchmark::DoNotOptimize(build_left_operator(g));
      benchmark::DoNotOptimize(build_right_operator(g));
    }
  }
  BENCHMARK(build_operators)->Arg(0)->Arg(1);

  void verify_theorem(benchmark::State& state, std::string const& structure,
                      std::string const& id) {
    auto g = load(structure);
    for (auto _ : state) {
      benchmark::DoNotOptimize(run_verify(g, structure, id));
    }
  }
  BENCHMARK_CAPTURE(verify_theorem, lz3_level, std::string("lz3"), std::string("3.7"));
  BENCHMARK_CAPTURE(verify_theorem, mod4mul_bijection, std::string("mod4mul"),
                    std::string("5.13"));
  BENCHMARK_CAPTURE(verify_theorem, mod16_meet, std::string("mod16"), std::string("4.6"))
      ->Unit(benchmark::kMillisecond);

  void enumerate_structures(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_gamma_semigroups_of_size(n, 1));
    }
  }
  BENCHMARK(enumerate_structures)->DenseRange(1, 3);

  void search_level_criterion(benchmark::State& state) {
    SearchOptions options;
    options.max_s = 2;
    options.max_g = 1;
    options.grid  = uniform_grid(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(run_search("level-criterion", options));
    }
  }
  BENCHMARK(search_level_criterion);

}  // namespace

BENCHMARK_MAIN();
