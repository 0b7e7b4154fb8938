#ifndef PATHRW_CATCHECK_HPP
#define PATHRW_CATCHECK_HPP

#include "pathrw/rw2.hpp"

namespace pathrw {

/// Outcome of one categorical-law check on one instance.  When pass is true
/// the witness replays and certifies the verdict.
struct LawReport {
  std::string law;       // assoc | id-left | id-right | inv-left | inv-right |
                         // interchange | pentagon | triangle | hcomp-assoc | hcomp-id
  std::string instance;  // serialized sampled paths/cells
  std::string witness;   // certificate trace or canonical-form digests
  bool pass = false;
  std::string detail;
};

/// Weak groupoid laws on a composable triple p: a→b, q: b→c, r: c→d, each up
/// to rw-equality with a replayable certificate.
std::vector<LawReport> check_groupoid(const PathPtr& p, const PathPtr& q, const PathPtr& r);

/// Vertical-category laws on canonical forms: identities, associativity,
/// inverses.  theta: s⇒t, phi: t⇒u, psi: u⇒v between paths a→b.
std::vector<LawReport> check_2cat_vertical(const TwoCell& theta, const TwoCell& phi,
                                           const TwoCell& psi);

/// Interchange: alpha: s⇒t, chi: t⇒x over a→b; theta: r⇒w, phi: w⇒y over b→c.
LawReport check_interchange(const TwoCell& alpha, const TwoCell& chi, const TwoCell& theta,
                            const TwoCell& phi);

/// Mac Lane pentagon on a composable 4-chain s,r,p,u.  Both routes are built
/// from single reversed-TT `assoc` steps (whiskered where the diagram says
/// so); the check verifies endpoint agreement of the routes and then compares
/// canonical forms.  A canonical-only mismatch is flagged in `detail` as a
/// completeness gap of the sequence-level rule set.
LawReport check_pentagon(const PathPtr& s, const PathPtr& r, const PathPtr& p, const PathPtr& u);

/// Mac Lane triangle on a composable pair s: a→b, r: b→c, with the identity
/// path ρ_b in the middle.  Same endpoint/canonical split as check_pentagon.
LawReport check_triangle(const PathPtr& s, const PathPtr& r);

/// Componentwise horizontal identity law: the composite with the identity cell
/// on ρ_a is connected to alpha by single TLR isomorphism steps.
LawReport check_hcomp_id(const TwoCell& alpha);

/// Componentwise horizontal associativity: the two triple composites live over
/// the two τ-associations and are connected by single assoc steps.
LawReport check_hcomp_assoc(const TwoCell& alpha, const TwoCell& theta, const TwoCell& psi);

/// Single-step helper cells used by the coherence diagrams.
TwoCell assoc_cell(const PathPtr& p);                         // τ(x,τ(y,z)) ⇒ τ(τ(x,y),z)
TwoCell step_cell(const PathPtr& p, RwRule rule, const PathPosition& at);

}  // namespace pathrw

#endif
