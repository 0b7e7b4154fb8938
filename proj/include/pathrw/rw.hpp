#ifndef PATHRW_RW_HPP
#define PATHRW_RW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathrw/path.hpp"

namespace pathrw {

/// The seven path-rewrite rules:
///   SR   σ(ρ)        ▷ ρ
///   SS   σ(σ(r))     ▷ r
///   TR   τ(r,σ(r))   ▷ ρ at src(r)
///   TSR  τ(σ(r),r)   ▷ ρ at dst(r)
///   TRR  τ(r,ρ)      ▷ r
///   TLR  τ(ρ,r)      ▷ r
///   TT   τ(τ(t,r),s) ▷ τ(t,τ(r,s))
enum class RwRule : std::uint8_t { SR, SS, TR, TSR, TRR, TLR, TT };

std::string rw_rule_name(RwRule r);
std::optional<RwRule> rw_rule_from_name(const std::string& name);

/// Addresses a Path subterm: inner descends Sigma, first/second descend Tau.
enum class PathTag : std::uint8_t { First, Second, Inner };
using PathPosition = std::vector<PathTag>;

std::string path_position_to_string(const PathPosition& at);  // "root" when empty
PathPosition path_position_from_string(const std::string& text);

PathPtr subpath_at(const PathPtr& p, const PathPosition& at);
PathPtr replace_subpath(const PathPtr& p, const PathPosition& at, const PathPtr& replacement);

struct RwStep {
  PathPtr before, after;
  RwRule rule;
  PathPosition at;
  bool reversed = false;  // reversed: applying the rule to `after` yields `before`
};

/// Flips the direction of a step (swaps before/after).
RwStep invert_step(const RwStep& s);

struct RwSequence {
  PathPtr start;
  std::vector<RwStep> steps;
  std::string name;  // optional label θ

  PathPtr end() const { return steps.empty() ? start : steps.back().after; }
};

/// Validates chaining, endpoint preservation, and that every step really is an
/// application of its rule (forward or reversed).  Independent replay of
/// certificates goes through this.
bool replay(const RwSequence& seq);

/// Every (rule, position) pair whose left-hand side matches, in deterministic
/// outermost-leftmost order.
std::vector<std::pair<RwRule, PathPosition>> rw_redexes(const PathPtr& p);

/// One rw-contraction.  Throws RuleMismatch / InvalidPosition.
PathPtr rw_contract(const PathPtr& p, RwRule rule, const PathPosition& at);

struct Strategy {
  enum class Kind { LeftmostOutermost, LeftmostInnermost, Random };
  Kind kind = Kind::LeftmostOutermost;
  std::uint64_t seed = 0;

  static Strategy lo() { return {Kind::LeftmostOutermost, 0}; }
  static Strategy li() { return {Kind::LeftmostInnermost, 0}; }
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

/// Rewrites to normal form; the returned trace replays start to the normal
/// form.  Guarded by a step budget of 10·size(p)²; exceeding it throws
/// BudgetExceeded (which would falsify the termination claim at desk scale).
std::pair<PathPtr, RwSequence> rw_normalize(const PathPtr& p, const Strategy& strategy);

/// Normal-form based rw-equality decision.  Returns a zig-zag certificate from
/// p to q, or nullopt (endpoints differ, or distinct normal forms).
std::optional<RwSequence> rw_equal(const PathPtr& p, const PathPtr& q);

struct RewriteGraph {
  std::vector<PathPtr> nodes;  // nodes[0] is the start path
  struct Edge {
    std::size_t from, to;
    RwRule rule;
    PathPosition at;
  };
  std::vector<Edge> edges;
  std::vector<std::size_t> sinks;  // indices of normal forms
};

/// Full reachability graph under forward rw-contraction.  Throws CapExceeded
/// if more than `cap` distinct paths are reached.
RewriteGraph rewrite_graph(const PathPtr& p, std::size_t cap);

/// One step per line: `<rule> @ <path-position> : <before-hash> -> <after-hash>`.
std::string format_trace(const RwSequence& seq);

std::uint64_t path_digest(const PathPtr& p);

/// Fault injection for mutation-sensitivity testing: while set, rw_contract
/// produces a corrupted right-hand side for the given rule.
void set_rule_fault(std::optional<RwRule> rule);
std::optional<RwRule> rule_fault();

}  // namespace pathrw

#endif
