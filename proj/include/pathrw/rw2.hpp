#ifndef PATHRW_RW2_HPP
#define PATHRW_RW2_HPP

#include "pathrw/rw.hpp"

namespace pathrw {

/// An rw-sequence together with its canonical form: the computable
/// representative of an rw₂-equivalence class.  2-cells between the paths
/// `source` and `target`.
struct TwoCell {
  RwSequence underlying;
  RwSequence canonical;
  PathPtr source, target;
};

/// Canonical form: (1) cancel adjacent mutually-inverse step pairs (the
/// sr₂/ss₂/tr₂/tsr₂ cancellations at sequence level); (2) bubble adjacent
/// steps at disjoint path-positions into ascending lexicographic position
/// order (choice independence, cd₂); recheck cancellation after each pass.
/// Idempotent; preserves start/end.
RwSequence canonicalize(const RwSequence& seq);

TwoCell make_cell(RwSequence seq);

/// Identity 2-cell: the empty sequence at p.
TwoCell seq_refl(const PathPtr& p);

/// Reverses step order and flips every direction flag; swaps source/target.
TwoCell seq_inverse(const TwoCell& cell);

/// Vertical composition (concatenation).  Throws EndpointMismatch unless
/// target(first) is structurally equal to source(second).
TwoCell seq_compose(const TwoCell& first, const TwoCell& second);

/// True iff sources/targets match and canonical forms coincide.
bool rw2_equal(const TwoCell& a, const TwoCell& b);

/// Horizontal composition: alpha: s ⇒ t over a→b, theta: r ⇒ w over b→c,
/// giving τ(s,r) ⇒ τ(t,w).  Every step of alpha is whiskered under the first
/// arm of τ(–,r), then every step of theta under the second arm of τ(t,–).
TwoCell horizontal_compose(const TwoCell& alpha, const TwoCell& theta);

/// True iff neither position is a prefix of the other (cd₂ independence).
bool disjoint_positions(const PathPosition& a, const PathPosition& b);

}  // namespace pathrw

#endif
