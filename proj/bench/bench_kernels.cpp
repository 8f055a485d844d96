// Serial versus parallel timings for the three enumeration kernels.
// The work per net is identical by construction (the tests assert exact
// result equality), so the comparison isolates scheduling overhead.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "semiflow/farkas.hpp"
#include "semiflow/hilbert.hpp"
#include "semiflow/net.hpp"
#include "semiflow/oracle.hpp"

using namespace semiflow;

namespace {

// d places in a cycle, one transition per edge; single semiflow (1,...,1)
PetriNet ring(int d) {
  PetriNet net;
  for (int p = 0; p < d; ++p) net.places.push_back("p" + std::to_string(p));
  for (int t = 0; t < d; ++t) net.transitions.push_back("t" + std::to_string(t));
  net.pre.assign(d, std::vector<Int>(d, Int(0)));
  net.post.assign(d, std::vector<Int>(d, Int(0)));
  for (int t = 0; t < d; ++t) {
    net.pre[t][t] = 1;
    net.post[(t + 1) % d][t] = 1;
  }
  return net;
}

// moderately dense weighted net; the seed pins the instance
PetriNet dense(int d, int nt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PetriNet net;
  for (int p = 0; p < d; ++p) net.places.push_back("p" + std::to_string(p));
  for (int t = 0; t < nt; ++t) net.transitions.push_back("t" + std::to_string(t));
  net.pre.assign(d, std::vector<Int>(nt, Int(0)));
  net.post.assign(d, std::vector<Int>(nt, Int(0)));
  for (int p = 0; p < d; ++p)
    for (int t = 0; t < nt; ++t) {
      net.pre[p][t] = static_cast<long>(rng() % 3);
      net.post[p][t] = static_cast<long>(rng() % 3);
    }
  return net;
}

void bm_elimination(benchmark::State& state, bool parallel) {
  auto net = dense(static_cast<int>(state.range(0)), 6, 12345);
  FarkasOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_set(net, opts));
}

void bm_completion(benchmark::State& state, bool parallel) {
  auto net = dense(static_cast<int>(state.range(0)), 4, 777);
  HilbertOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(minimal_semiflows(net, opts));
}

void bm_box_scan(benchmark::State& state, bool parallel) {
  auto net = ring(4);
  OracleOptions opts;
  opts.parallel = parallel;
  unsigned bound = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_semiflows(net, bound, opts));
}

void elimination_serial(benchmark::State& s) { bm_elimination(s, false); }
void elimination_parallel(benchmark::State& s) { bm_elimination(s, true); }
void completion_serial(benchmark::State& s) { bm_completion(s, false); }
void completion_parallel(benchmark::State& s) { bm_completion(s, true); }
void box_scan_serial(benchmark::State& s) { bm_box_scan(s, false); }
void box_scan_parallel(benchmark::State& s) { bm_box_scan(s, true); }

}  // namespace

BENCHMARK(elimination_serial)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(elimination_parallel)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(completion_serial)->Arg(6)->Arg(8);
BENCHMARK(completion_parallel)->Arg(6)->Arg(8);
BENCHMARK(box_scan_serial)->Arg(20)->Arg(40);
BENCHMARK(box_scan_parallel)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
