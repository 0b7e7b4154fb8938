#include "pathrw/corpus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathrw {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t x = seed * 0x9e3779b97f4a7c15ull + i + 1;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

const char* kFreePool[] = {"u", "v", "w", "z"};

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

TermPtr gen_term(std::mt19937_64& rng, int max_depth, int binder_depth) {
  if (max_depth <= 0) {
    if (binder_depth > 0 && pick(rng, 2) == 0)
      return mk_var(static_cast<int>(pick(rng, static_cast<std::size_t>(binder_depth))));
    return mk_free(kFreePool[pick(rng, 4)]);
  }
  switch (pick(rng, 10)) {
    case 0:
    case 1:
    case 2: {  // abstraction; occasionally an explicit η-redex shape λ.f #0
      std::string hint(1, static_cast<char>('a' + pick(rng, 6)));
      if (pick(rng, 4) == 0) {
        // fn generated without outer binders, so the bound variable is not free in it
        TermPtr fn = gen_term(rng, max_depth - 1, 0);
        return mk_abs(hint, mk_app(fn, mk_var(0)));
      }
      return mk_abs(hint, gen_term(rng, max_depth - 1, binder_depth + 1));
    }
    case 3:
    case 4:
    case 5:
    case 6:  // application; left side sometimes an abstraction to seed β-redexes
      if (pick(rng, 3) == 0)
        return mk_app(mk_abs("b", gen_term(rng, max_depth - 1, binder_depth + 1)),
                      gen_term(rng, max_depth - 1, binder_depth));
      return mk_app(gen_term(rng, max_depth - 1, binder_depth),
                    gen_term(rng, max_depth - 1, binder_depth));
    default:
      if (binder_depth > 0 && pick(rng, 2) == 0)
        return mk_var(static_cast<int>(pick(rng, static_cast<std::size_t>(binder_depth))));
      return mk_free(kFreePool[pick(rng, 4)]);
  }
}

PathPtr gen_path_from(std::mt19937_64& rng, const TermPtr& t, unsigned depth) {
  auto redexes = find_redexes(t);
  if (depth == 0) {
    if (!redexes.empty() && pick(rng, 2) == 0) {
      const auto& [pos, kind] = redexes[pick(rng, redexes.size())];
      return mk_atomic(t, pos, kind);
    }
    return mk_rho(t);
  }
  switch (pick(rng, 8)) {
    case 0:
      return mk_rho(t);
    case 1:
    case 2:
      if (!redexes.empty()) {
        const auto& [pos, kind] = redexes[pick(rng, redexes.size())];
        return mk_atomic(t, pos, kind);
      }
      return mk_rho(t);
    case 3:
    case 4:
      return mk_sigma(gen_path_to(rng, t, depth - 1));
    default: {
      PathPtr first = gen_path_from(rng, t, depth - 1);
      PathPtr second = gen_path_from(rng, first->dst, depth - 1);
      return mk_tau(first, second);
    }
  }
}

PathPtr gen_path_to(std::mt19937_64& rng, const TermPtr& t, unsigned depth) {
  if (depth == 0) return mk_rho(t);
  switch (pick(rng, 8)) {
    case 0:
    case 1:
      return mk_rho(t);
    case 2:
    case 3:
    case 4:
      return mk_sigma(gen_path_from(rng, t, depth - 1));
    default: {
      PathPtr second = gen_path_to(rng, t, depth - 1);
      PathPtr first = gen_path_to(rng, second->src, depth - 1);
      return mk_tau(first, second);
    }
  }
}

PathPtr gen_path(std::uint64_t seed, unsigned depth) {
  std::mt19937_64 rng(seed);
  TermPtr base = gen_term(rng, 4);
  return gen_path_from(rng, base, depth);
}

std::vector<PathPtr> gen_corpus(const CorpusOptions& opts) {
  std::vector<PathPtr> out(opts.size);
  for (std::size_t i = 0; i < opts.size; ++i) out[i] = gen_path(mix(opts.seed, i), opts.depth);
  return out;
}

std::pair<TwoCell, TwoCell> split_cell(const PathPtr& p, std::mt19937_64& rng) {
  auto [nf, trace] = rw_normalize(p, Strategy::random(rng()));
  (void)nf;
  std::size_t cut = trace.steps.empty() ? 0 : pick(rng, trace.steps.size() + 1);
  RwSequence head, tail;
  head.start = p;
  head.steps.assign(trace.steps.begin(), trace.steps.begin() + static_cast<std::ptrdiff_t>(cut));
  tail.start = head.end();
  tail.steps.assign(trace.steps.begin() + static_cast<std::ptrdiff_t>(cut), trace.steps.end());
  return {make_cell(std::move(head)), make_cell(std::move(tail))};
}

TwoCell loop_cell(const PathPtr& p, std::mt19937_64& rng) {
  auto [nf1, t1] = rw_normalize(p, Strategy::random(rng()));
  auto [nf2, t2] = rw_normalize(p, Strategy::random(rng()));
  (void)nf1;
  (void)nf2;
  return seq_compose(make_cell(std::move(t1)), seq_inverse(make_cell(std::move(t2))));
}

// ---- batch kernels ----

namespace {

/// Runs fn(i) over [0, n), OpenMP-parallel when requested.
template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace

std::vector<std::uint64_t> normalize_digests(const std::vector<PathPtr>& corpus,
                                             const Strategy& strategy, Exec exec) {
  std::vector<std::uint64_t> out(corpus.size(), 0);
  for_each_index(corpus.size(), exec, [&](std::size_t i) {
    Strategy s = strategy;
    if (s.kind == Strategy::Kind::Random) s.seed = mix(strategy.seed, i);
    try {
      out[i] = path_digest(rw_normalize(corpus[i], s).first);
    } catch (const BudgetExceeded&) {
      out[i] = ~0ull;
    }
  });
  return out;
}

StrategyAgreement check_strategy_agreement(const std::vector<PathPtr>& corpus, Exec exec) {
  StrategyAgreement summary;
  summary.instances = corpus.size();
  std::vector<int> status(corpus.size(), 0);  // 0 ok, 1 disagreement, 2 budget

  for_each_index(corpus.size(), exec, [&](std::size_t i) {
    try {
      PathPtr lo = rw_normalize(corpus[i], Strategy::lo()).first;
      PathPtr li = rw_normalize(corpus[i], Strategy::li()).first;
      PathPtr rnd = rw_normalize(corpus[i], Strategy::random(mix(0xC0FFEE, i))).first;
      if (!path_eq(lo, li) || !path_eq(lo, rnd)) status[i] = 1;
    } catch (const BudgetExceeded&) {
      status[i] = 2;
    }
  });

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (status[i] == 1) {
      ++summary.disagreements;
      summary.findings.push_back("strategy disagreement: " +
                                 print_path(corpus[i], PathStyle::Compact));
    } else if (status[i] == 2) {
      ++summary.budget_errors;
      summary.findings.push_back("budget exceeded: " + print_path(corpus[i], PathStyle::Compact));
    }
  }
  return summary;
}

SinkSummary check_unique_sinks(const std::vector<PathPtr>& corpus, std::size_t cap, Exec exec) {
  SinkSummary summary;
  summary.instances = corpus.size();
  std::vector<int> status(corpus.size(), 0);  // 0 ok, 1 multi-sink, 2 cap

  for_each_index(corpus.size(), exec, [&](std::size_t i) {
    try {
      RewriteGraph g = rewrite_graph(corpus[i], cap);
      if (g.sinks.size() != 1) status[i] = 1;
    } catch (const CapExceeded&) {
      status[i] = 2;
    }
  });

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (status[i] == 1) {
      ++summary.multi_sink;
      summary.findings.push_back("multiple normal forms: " +
                                 print_path(corpus[i], PathStyle::Compact));
    } else if (status[i] == 2) {
      ++summary.cap_skipped;
    }
  }
  return summary;
}

}  // namespace pathrw
