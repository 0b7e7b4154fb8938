#ifndef PATHRW_PATH_HPP
#define PATHRW_PATH_HPP

#include <memory>
#include <string>

#include "pathrw/term.hpp"

namespace pathrw {

/// Computational paths: proof terms for βη-equalities, built from atomic
/// contractions and the constructors ρ (reflexivity), σ (symmetry),
/// τ (transitivity).  Composition convention: compose(p: a→b, q: b→c) is
/// Tau(p, q); the categorical q ∘ p.
enum class PathKind { Atomic, Rho, Sigma, Tau };

struct Path;
using PathPtr = std::shared_ptr<const Path>;

struct Path {
  PathKind kind;
  TermPtr src, dst;   // cached endpoints

  // Atomic
  Position pos;
  StepKind step = StepKind::Beta;

  PathPtr a, b;       // Sigma: inner in a; Tau: first in a, second in b
};

/// Validating constructors.
PathPtr mk_atomic(const TermPtr& source, const Position& pos, StepKind kind);
PathPtr mk_rho(const TermPtr& at);
PathPtr mk_sigma(const PathPtr& inner);
PathPtr mk_tau(const PathPtr& first, const PathPtr& second);  // throws EndpointMismatch

/// Raw constructors: caches computed from children, no validity checks.
/// For the rewrite engine's spine rebuilds and for mutation tests.
namespace raw {
PathPtr atomic(const TermPtr& source, const TermPtr& target, const Position& pos, StepKind kind);
PathPtr sigma(const PathPtr& inner);
PathPtr tau(const PathPtr& first, const PathPtr& second);
}  // namespace raw

std::pair<TermPtr, TermPtr> endpoints(const PathPtr& p);

/// Structural equality on nameless skeletons (α on endpoints included).
bool path_eq(const PathPtr& p, const PathPtr& q);

std::size_t path_size(const PathPtr& p);

/// Checks all Path invariants recursively, including cache agreement.
bool well_formed(const PathPtr& p);

std::string path_skeleton(const PathPtr& p);

/// Left-associated Tau over the conversion steps; empty sequence gives Rho(m).
/// Reversed contractions are wrapped in Sigma.  Throws BrokenChain.
PathPtr path_of_conversion(const TermPtr& m, const std::vector<ConvStep>& steps);

enum class PathStyle {
  Compact,    // round-trippable surface syntax: tau(sigma(...),beta@fn.arg(...))
  Greek,      // display notation: τ(σ(...),β(src,dst)) on whole terms
  Annotated,  // like Greek but non-root atomic steps carry their ν/ξ/μ wrapper chain
};

std::string print_path(const PathPtr& p, PathStyle style = PathStyle::Compact);

/// Parses the Compact surface syntax back into a validated Path.
PathPtr parse_path(const std::string& text);

}  // namespace pathrw

#endif
