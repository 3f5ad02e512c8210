#include <map>
#include <string>

#include <benchmark/benchmark.h>

#include "cgsb/window.hpp"

using namespace cgsb;

namespace {

struct Fixture {
  Presentation pres;
  WindowedSystem sys;
};

const Fixture& fixture(const std::string& name, IndexWindow w) {
  static std::map<std::string, Fixture> cache;
  std::string key = name + "/" + std::to_string(w.W) + "/" + std::to_string(w.M);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Presentation p = builtin(name);
    it = cache.emplace(key, Fixture{p, instantiate_window(p, w)}).first;
  }
  return it->second;
}

void run_check(benchmark::State& state, const std::string& name, IndexWindow w, bool parallel) {
  const Fixture& f = fixture(name, w);
  CheckParams params = f.sys.params();
  std::size_t records = 0;
  for (auto _ : state) {
    GsbReport rep = parallel ? check_gsb_parallel(f.pres.sig, f.sys.set, params)
                             : check_gsb_serial(f.pres.sig, f.sys.set, params);
    records = rep.records.size();
    benchmark::DoNotOptimize(rep.nontrivial);
  }
  state.counters["compositions"] = static_cast<double>(records);
}

void BM_VirasoroSerial(benchmark::State& s) { run_check(s, "virasoro", {3, 3}, false); }
void BM_VirasoroParallel(benchmark::State& s) { run_check(s, "virasoro", {3, 3}, true); }
void BM_HeisenbergVirasoroSerial(benchmark::State& s) { run_check(s, "heisenberg-virasoro-amended", {2, 5}, false); }
void BM_HeisenbergVirasoroParallel(benchmark::State& s) { run_check(s, "heisenberg-virasoro-amended", {2, 5}, true); }

}  // namespace

BENCHMARK(BM_VirasoroSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VirasoroParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeisenbergVirasoroSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeisenbergVirasoroParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
