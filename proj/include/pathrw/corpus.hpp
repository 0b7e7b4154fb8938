#ifndef PATHRW_CORPUS_HPP
#define PATHRW_CORPUS_HPP

#include <random>

#include "pathrw/rw2.hpp"

namespace pathrw {

/// Seeded random generation of terms, well-formed paths, and 2-cells.
/// Item i of a corpus depends only on (seed, i), so corpora are reproducible
/// and may be generated or processed in parallel.

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t size = 100;
  unsigned depth = 6;  // constructor depth cap for the ρ/σ/τ decoration
};

TermPtr gen_term(std::mt19937_64& rng, int max_depth, int binder_depth = 0);

/// Path starting at t (F-shaped) / ending at t (B-shaped).
PathPtr gen_path_from(std::mt19937_64& rng, const TermPtr& t, unsigned depth);
PathPtr gen_path_to(std::mt19937_64& rng, const TermPtr& t, unsigned depth);

PathPtr gen_path(std::uint64_t seed, unsigned depth);
std::vector<PathPtr> gen_corpus(const CorpusOptions& opts);

/// α: p ⇒ mid and χ: mid ⇒ nf(p), split from one random-strategy trace.
std::pair<TwoCell, TwoCell> split_cell(const PathPtr& p, std::mt19937_64& rng);

/// A 2-cell p ⇒ p containing reversed steps (trace · inverse other trace).
TwoCell loop_cell(const PathPtr& p, std::mt19937_64& rng);

// ---- batch kernels ----
// Each kernel has an OpenMP-parallel inner loop and a serial reference;
// tests compare the two, tools/bench_corpus times them.

enum class Exec { Serial, Parallel };

/// Normal-form digests of a corpus under one strategy (random strategies are
/// reseeded per item from the item index).
std::vector<std::uint64_t> normalize_digests(const std::vector<PathPtr>& corpus,
                                             const Strategy& strategy, Exec exec);

struct StrategyAgreement {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t budget_errors = 0;
  std::vector<std::string> findings;  // serialized offending instances
};

/// Normalizes every path under leftmost-outermost, leftmost-innermost and a
/// seeded random strategy, and reports any instance where the normal forms
/// differ or the step budget is hit.
StrategyAgreement check_strategy_agreement(const std::vector<PathPtr>& corpus, Exec exec);

struct SinkSummary {
  std::size_t instances = 0;
  std::size_t multi_sink = 0;
  std::size_t cap_skipped = 0;  // instances whose graph exceeded the node cap
  std::vector<std::string> findings;
};

/// Exhaustive rewrite graphs; counts instances with more than one sink.
SinkSummary check_unique_sinks(const std::vector<PathPtr>& corpus, std::size_t cap, Exec exec);

}  // namespace pathrw

#endif
