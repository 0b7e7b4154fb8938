// Times the serial vs parallel corpus kernels on identical inputs and checks
// that their outputs agree.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "pathrw/corpus.hpp"

using namespace pathrw;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
  CorpusOptions opts;
  opts.seed = 2024;
  opts.size = argc > 1 ? static_cast<std::size_t>(std::atoll(argv[1])) : 4000;
  opts.depth = 6;

  std::cout << "generating " << opts.size << " paths (depth " << opts.depth << ")...\n";
  auto corpus = gen_corpus(opts);

  auto t0 = clock_type::now();
  auto serial = normalize_digests(corpus, Strategy::lo(), Exec::Serial);
  double ts = seconds_since(t0);

  t0 = clock_type::now();
  auto parallel = normalize_digests(corpus, Strategy::lo(), Exec::Parallel);
  double tp = seconds_since(t0);

  if (serial != parallel) {
    std::cerr << "MISMATCH: serial and parallel kernels disagree\n";
    return 1;
  }

  std::printf("normalize_digests  serial %.3fs  parallel %.3fs  speedup %.2fx\n", ts, tp,
              tp > 0 ? ts / tp : 0.0);

  t0 = clock_type::now();
  auto agree_s = check_strategy_agreement(corpus, Exec::Serial);
  double as = seconds_since(t0);
  t0 = clock_type::now();
  auto agree_p = check_strategy_agreement(corpus, Exec::Parallel);
  double ap = seconds_since(t0);
  if (agree_s.disagreements != agree_p.disagreements ||
      agree_s.budget_errors != agree_p.budget_errors) {
    std::cerr << "MISMATCH: strategy-agreement kernels disagree\n";
    return 1;
  }
  std::printf("strategy_agreement serial %.3fs  parallel %.3fs  speedup %.2fx\n", as, ap,
              ap > 0 ? as / ap : 0.0);
  std::printf("  disagreements %zu, budget errors %zu\n", agree_s.disagreements,
              agree_s.budget_errors);
  return 0;
}
