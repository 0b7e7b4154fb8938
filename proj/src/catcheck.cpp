#include "pathrw/catcheck.hpp"

namespace pathrw {

namespace {

std::string describe(const PathPtr& p) { return print_path(p, PathStyle::Compact); }

LawReport certified(const std::string& law, const std::string& instance,
                    const std::optional<RwSequence>& cert) {
  LawReport rep;
  rep.law = law;
  rep.instance = instance;
  if (!cert) {
    rep.pass = false;
    rep.detail = "no rw-equality certificate";
    return rep;
  }
  if (!replay(*cert)) {
    rep.pass = false;
    rep.detail = "certificate failed to replay";
    return rep;
  }
  rep.pass = true;
  rep.witness = format_trace(*cert);
  return rep;
}

std::string canonical_digest(const TwoCell& cell) {
  std::string out;
  for (const RwStep& s : cell.canonical.steps) {
    out += rw_rule_name(s.rule);
    if (s.reversed) out += "^-1";
    out += "@";
    out += path_position_to_string(s.at);
    out += ";";
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace

std::vector<LawReport> check_groupoid(const PathPtr& p, const PathPtr& q, const PathPtr& r) {
  if (!alpha_eq(p->dst, q->src) || !alpha_eq(q->dst, r->src))
    throw EndpointMismatch("check_groupoid: triple is not composable");
  std::string inst = describe(p) + " ; " + describe(q) + " ; " + describe(r);
  std::vector<LawReport> out;

  out.push_back(certified("assoc", inst,
                          rw_equal(mk_tau(mk_tau(p, q), r), mk_tau(p, mk_tau(q, r)))));
  out.push_back(certified("id-left", inst, rw_equal(mk_tau(mk_rho(p->src), p), p)));
  out.push_back(certified("id-right", inst, rw_equal(mk_tau(p, mk_rho(p->dst)), p)));
  out.push_back(certified("inv-left", inst, rw_equal(mk_tau(p, mk_sigma(p)), mk_rho(p->src))));
  out.push_back(certified("inv-right", inst, rw_equal(mk_tau(mk_sigma(p), p), mk_rho(p->dst))));
  return out;
}

std::vector<LawReport> check_2cat_vertical(const TwoCell& theta, const TwoCell& phi,
                                           const TwoCell& psi) {
  std::string inst = canonical_digest(theta) + " | " + canonical_digest(phi) + " | " +
                     canonical_digest(psi);
  std::vector<LawReport> out;
  auto strict = [&](const std::string& law, const TwoCell& lhs, const TwoCell& rhs) {
    LawReport rep;
    rep.law = law;
    rep.instance = inst;
    rep.pass = rw2_equal(lhs, rhs);
    rep.witness = canonical_digest(lhs) + " vs " + canonical_digest(rhs);
    if (!rep.pass) rep.detail = "canonical forms differ";
    out.push_back(std::move(rep));
  };

  strict("id-left", seq_compose(seq_refl(theta.source), theta), theta);
  strict("id-right", seq_compose(theta, seq_refl(theta.target)), theta);
  strict("assoc", seq_compose(seq_compose(theta, phi), psi),
         seq_compose(theta, seq_compose(phi, psi)));
  strict("inv-left", seq_compose(theta, seq_inverse(theta)), seq_refl(theta.source));
  strict("inv-right", seq_compose(seq_inverse(theta), theta), seq_refl(theta.target));
  return out;
}

LawReport check_interchange(const TwoCell& alpha, const TwoCell& chi, const TwoCell& theta,
                            const TwoCell& phi) {
  TwoCell lhs = horizontal_compose(seq_compose(alpha, chi), seq_compose(theta, phi));
  TwoCell rhs = seq_compose(horizontal_compose(alpha, theta), horizontal_compose(chi, phi));
  LawReport rep;
  rep.law = "interchange";
  rep.instance = canonical_digest(alpha) + " | " + canonical_digest(chi) + " | " +
                 canonical_digest(theta) + " | " + canonical_digest(phi);
  rep.pass = rw2_equal(lhs, rhs);
  rep.witness = canonical_digest(lhs) + " vs " + canonical_digest(rhs);
  if (!rep.pass) rep.detail = "canonical forms differ";
  return rep;
}

TwoCell assoc_cell(const PathPtr& p) {
  if (p->kind != PathKind::Tau || p->b->kind != PathKind::Tau)
    throw RuleMismatch("assoc_cell: expected τ(x,τ(y,z))");
  PathPtr assoc = raw::tau(raw::tau(p->a, p->b->a), p->b->b);
  if (!path_eq(rw_contract(assoc, RwRule::TT, {}), p))
    throw RuleMismatch("assoc_cell: inverse tt check failed");
  RwSequence seq;
  seq.start = p;
  seq.steps.push_back({p, assoc, RwRule::TT, {}, true});
  return make_cell(std::move(seq));
}

TwoCell step_cell(const PathPtr& p, RwRule rule, const PathPosition& at) {
  PathPtr after = rw_contract(p, rule, at);
  RwSequence seq;
  seq.start = p;
  seq.steps.push_back({p, after, rule, at, false});
  return make_cell(std::move(seq));
}

static LawReport route_comparison(const std::string& law, const std::string& inst,
                                  const TwoCell& route_a, const TwoCell& route_b,
                                  const PathPtr& expected_end) {
  LawReport rep;
  rep.law = law;
  rep.instance = inst;
  rep.witness = canonical_digest(route_a) + " vs " + canonical_digest(route_b);

  bool endpoints_ok = path_eq(route_a.target, route_b.target) &&
                      path_eq(route_a.source, route_b.source) &&
                      path_eq(route_a.target, expected_end);
  bool replays = replay(route_a.underlying) && replay(route_b.underlying);
  if (!endpoints_ok || !replays) {
    rep.pass = false;
    rep.detail = endpoints_ok ? "route failed to replay" : "routes disagree on endpoints";
    return rep;
  }
  rep.pass = rw2_equal(route_a, route_b);
  if (!rep.pass)
    rep.detail =
        "completeness gap: routes agree on endpoints but have distinct canonical forms";
  return rep;
}

LawReport check_pentagon(const PathPtr& s, const PathPtr& r, const PathPtr& p, const PathPtr& u) {
  if (!alpha_eq(s->dst, r->src) || !alpha_eq(r->dst, p->src) || !alpha_eq(p->dst, u->src))
    throw EndpointMismatch("check_pentagon: 4-chain is not composable");
  std::string inst =
      describe(s) + " ; " + describe(r) + " ; " + describe(p) + " ; " + describe(u);

  PathPtr start = mk_tau(s, mk_tau(r, mk_tau(p, u)));  // ((u∘p)∘r)∘s
  PathPtr expected_end = mk_tau(mk_tau(mk_tau(s, r), p), u);

  // right side of the diagram: (assoc ∘h [ρ_s]), assoc, ([ρ_u] ∘h assoc)
  TwoCell a1 = horizontal_compose(seq_refl(s), assoc_cell(mk_tau(r, mk_tau(p, u))));
  TwoCell a2 = assoc_cell(a1.target);
  TwoCell a3 = horizontal_compose(assoc_cell(mk_tau(s, mk_tau(r, p))), seq_refl(u));
  TwoCell right = seq_compose(seq_compose(a1, a2), a3);

  // left side: assoc, assoc
  TwoCell b1 = assoc_cell(start);
  TwoCell b2 = assoc_cell(b1.target);
  TwoCell left = seq_compose(b1, b2);

  return route_comparison("pentagon", inst, right, left, expected_end);
}

LawReport check_triangle(const PathPtr& s, const PathPtr& r) {
  if (!alpha_eq(s->dst, r->src))
    throw EndpointMismatch("check_triangle: pair is not composable");
  std::string inst = describe(s) + " ; " + describe(r);

  PathPtr id_b = mk_rho(s->dst);
  PathPtr start = mk_tau(s, mk_tau(id_b, r));  // (r ∘ ρ_b) ∘ s
  PathPtr expected_end = mk_tau(s, r);

  // assoc then the ρ-on-the-right elimination, whiskered with [ρ_r]
  TwoCell a1 = assoc_cell(start);
  TwoCell a2 = horizontal_compose(step_cell(mk_tau(s, id_b), RwRule::TRR, {}), seq_refl(r));
  TwoCell route_a = seq_compose(a1, a2);

  // the ρ-on-the-left elimination, whiskered with [ρ_s]
  TwoCell route_b = horizontal_compose(seq_refl(s), step_cell(mk_tau(id_b, r), RwRule::TLR, {}));

  return route_comparison("triangle", inst, route_a, route_b, expected_end);
}

LawReport check_hcomp_id(const TwoCell& alpha) {
  LawReport rep;
  rep.law = "hcomp-id";
  rep.instance = canonical_digest(alpha);

  PathPtr id1 = mk_rho(alpha.source->src);
  TwoCell composite = horizontal_compose(seq_refl(id1), alpha);
  TwoCell l_src = step_cell(composite.source, RwRule::TLR, {});  // τ(ρ_a,s) ⇒ s
  TwoCell l_tgt = step_cell(composite.target, RwRule::TLR, {});  // τ(ρ_a,t) ⇒ t

  bool ok = replay(composite.underlying) && replay(l_src.underlying) &&
            replay(l_tgt.underlying) && path_eq(l_src.target, alpha.source) &&
            path_eq(l_tgt.target, alpha.target);
  rep.pass = ok;
  rep.witness = canonical_digest(composite);
  if (!ok) rep.detail = "identity isomorphism components failed";
  return rep;
}

LawReport check_hcomp_assoc(const TwoCell& alpha, const TwoCell& theta, const TwoCell& psi) {
  LawReport rep;
  rep.law = "hcomp-assoc";
  rep.instance =
      canonical_digest(alpha) + " | " + canonical_digest(theta) + " | " + canonical_digest(psi);

  TwoCell nested_right = horizontal_compose(alpha, horizontal_compose(theta, psi));
  TwoCell nested_left = horizontal_compose(horizontal_compose(alpha, theta), psi);
  TwoCell a_src = assoc_cell(nested_right.source);  // τ(s,τ(r,p)) ⇒ τ(τ(s,r),p)
  TwoCell a_tgt = assoc_cell(nested_right.target);

  bool ok = replay(nested_right.underlying) && replay(nested_left.underlying) &&
            path_eq(a_src.target, nested_left.source) &&
            path_eq(a_tgt.target, nested_left.target) && replay(a_src.underlying) &&
            replay(a_tgt.underlying);
  rep.pass = ok;
  rep.witness = canonical_digest(nested_left) + " vs " + canonical_digest(nested_right);
  if (!ok) rep.detail = "associativity isomorphism components failed";
  return rep;
}

}  // namespace pathrw
