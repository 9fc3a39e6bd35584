// Serial vs OpenMP round evaluation on the heaviest round of a completion,
// and whole completions.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "gsb/completion.hpp"
#include "gsb/coxeter.hpp"

using namespace gsb;

namespace {

struct Frozen {
  RewriteSystem system;
  std::size_t first_new = 0;
};

// The state entering the round that examines the most pairs.
const Frozen& heaviest_round(const std::string& type) {
  static std::map<std::string, Frozen> cache;
  auto it = cache.find(type);
  if (it != cache.end()) return it->second;
  const DiagramPreset p = builtin_preset(type);
  const Alphabet a = p.alphabet();
  Frozen best;
  std::size_t best_work = 0;
  CompletionOptions opt;
  opt.keep_added = false;
  opt.on_round = [&](const CompletionState& s) {
    const std::size_t fresh = s.rules.size() - s.first_new;
    const std::size_t work = fresh * s.rules.size();
    if (fresh > 0 && work > best_work) {
      best_work = work;
      best = Frozen{RewriteSystem(a, s.rules), s.first_new};
    }
  };
  shirshov_complete(presentation_from_matrix(p.matrix, a), a, {}, opt);
  return cache.emplace(type, std::move(best)).first->second;
}

void report(benchmark::State& state, const RoundResult& r) {
  state.counters["pairs"] = static_cast<double>(r.pairs);
  state.counters["candidates"] = static_cast<double>(r.candidates);
  state.counters["new"] = static_cast<double>(r.rules.size());
}

void BM_RoundSerial(benchmark::State& state, const std::string& type) {
  const Frozen& f = heaviest_round(type);
  RoundResult r;
  for (auto _ : state) {
    r = evaluate_round_serial(f.system, f.first_new, 128);
    benchmark::DoNotOptimize(r.rules.data());
  }
  report(state, r);
}

void BM_RoundParallel(benchmark::State& state, const std::string& type) {
  const Frozen& f = heaviest_round(type);
  const int threads = static_cast<int>(state.range(0));
  RoundResult r;
  for (auto _ : state) {
    r = evaluate_round_parallel(f.system, f.first_new, 128, threads);
    benchmark::DoNotOptimize(r.rules.data());
  }
  report(state, r);
}

void BM_Complete(benchmark::State& state, const std::string& type) {
  const DiagramPreset p = builtin_preset(type);
  const Alphabet a = p.alphabet();
  const auto initial = presentation_from_matrix(p.matrix, a);
  CompletionLimits limits;
  limits.max_degree = 128;
  CompletionOptions opt;
  opt.keep_added = false;
  opt.exec = ExecOptions{state.range(0) > 0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    CompletionReport r = shirshov_complete(initial, a, limits, opt);
    benchmark::DoNotOptimize(r.basis.size());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_RoundSerial, F4, std::string("F4"))->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_RoundParallel, F4, std::string("F4"))->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_RoundSerial, E6, std::string("E6"))->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_RoundParallel, E6, std::string("E6"))->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_RoundSerial, E7, std::string("E7"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RoundParallel, E7, std::string("E7"))->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RoundSerial, E8, std::string("E8"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RoundParallel, E8, std::string("E8"))->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
// Arg 0 runs the serial kernel; n > 0 the parallel kernel with n threads.
BENCHMARK_CAPTURE(BM_Complete, E7, std::string("E7"))->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Complete, E8, std::string("E8"))->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
