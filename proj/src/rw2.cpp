#include "pathrw/rw2.hpp"

#include <algorithm>

namespace pathrw {

bool disjoint_positions(const PathPosition& a, const PathPosition& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return true;
  return false;  // one is a prefix of the other (or they are equal)
}

static bool position_less(const PathPosition& a, const PathPosition& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

static bool cancels(const RwStep& x, const RwStep& y) {
  return x.rule == y.rule && x.at == y.at && x.reversed != y.reversed &&
         path_eq(y.after, x.before);
}

RwSequence canonicalize(const RwSequence& seq) {
  RwSequence out = seq;
  out.name.clear();
  auto& steps = out.steps;

  // generous bound; each cancellation shortens, each swap removes an inversion
  std::size_t guard = (steps.size() + 2) * (steps.size() + 2) * (steps.size() + 2);
  bool changed = true;
  while (changed) {
    if (guard-- == 0) throw Error("canonicalize failed to reach a fixpoint");
    changed = false;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      if (cancels(steps[i], steps[i + 1])) {
        steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i),
                    steps.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      RwStep& s1 = steps[i];
      RwStep& s2 = steps[i + 1];
      if (!disjoint_positions(s1.at, s2.at) || !position_less(s2.at, s1.at)) continue;
      // Disjoint steps commute: transplant s2's local change onto s1.before.
      PathPtr mid = replace_subpath(s1.before, s2.at, subpath_at(s2.after, s2.at));
      RwStep first{s1.before, mid, s2.rule, s2.at, s2.reversed};
      RwStep second{mid, s2.after, s1.rule, s1.at, s1.reversed};
      s1 = first;
      s2 = second;
      changed = true;
      break;
    }
  }
  return out;
}

TwoCell make_cell(RwSequence seq) {
  TwoCell cell;
  cell.source = seq.start;
  cell.target = seq.end();
  cell.canonical = canonicalize(seq);
  cell.underlying = std::move(seq);
  return cell;
}

TwoCell seq_refl(const PathPtr& p) {
  RwSequence seq;
  seq.start = p;
  return make_cell(std::move(seq));
}

TwoCell seq_inverse(const TwoCell& cell) {
  RwSequence seq;
  seq.start = cell.target;
  for (std::size_t i = cell.underlying.steps.size(); i-- > 0;)
    seq.steps.push_back(invert_step(cell.underlying.steps[i]));
  return make_cell(std::move(seq));
}

TwoCell seq_compose(const TwoCell& first, const TwoCell& second) {
  if (!path_eq(first.target, second.source))
    throw EndpointMismatch("vertical composition: cells do not meet");
  RwSequence seq;
  seq.start = first.source;
  seq.steps = first.underlying.steps;
  seq.steps.insert(seq.steps.end(), second.underlying.steps.begin(),
                   second.underlying.steps.end());
  return make_cell(std::move(seq));
}

static bool step_eq(const RwStep& a, const RwStep& b) {
  return a.rule == b.rule && a.at == b.at && a.reversed == b.reversed &&
         path_eq(a.before, b.before) && path_eq(a.after, b.after);
}

bool rw2_equal(const TwoCell& a, const TwoCell& b) {
  if (!path_eq(a.source, b.source) || !path_eq(a.target, b.target)) return false;
  if (a.canonical.steps.size() != b.canonical.steps.size()) return false;
  for (std::size_t i = 0; i < a.canonical.steps.size(); ++i)
    if (!step_eq(a.canonical.steps[i], b.canonical.steps[i])) return false;
  return true;
}

TwoCell horizontal_compose(const TwoCell& alpha, const TwoCell& theta) {
  const PathPtr& r = theta.source;
  const PathPtr& t = alpha.target;
  if (!alpha_eq(alpha.source->dst, r->src) || !alpha_eq(t->dst, r->src))
    throw EndpointMismatch("horizontal composition: 1-endpoints do not meet");

  RwSequence seq;
  seq.start = mk_tau(alpha.source, r);
  for (const RwStep& s : alpha.underlying.steps) {
    PathPosition at;
    at.reserve(s.at.size() + 1);
    at.push_back(PathTag::First);
    at.insert(at.end(), s.at.begin(), s.at.end());
    seq.steps.push_back({raw::tau(s.before, r), raw::tau(s.after, r), s.rule, at, s.reversed});
  }
  for (const RwStep& s : theta.underlying.steps) {
    PathPosition at;
    at.reserve(s.at.size() + 1);
    at.push_back(PathTag::Second);
    at.insert(at.end(), s.at.begin(), s.at.end());
    seq.steps.push_back({raw::tau(t, s.before), raw::tau(t, s.after), s.rule, at, s.reversed});
  }
  return make_cell(std::move(seq));
}

}  // namespace pathrw
