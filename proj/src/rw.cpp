#include "pathrw/rw.hpp"

#include <cstdio>
#include <random>
#include <unordered_map>

namespace pathrw {

std::string rw_rule_name(RwRule r) {
  switch (r) {
    case RwRule::SR: return "sr";
    case RwRule::SS: return "ss";
    case RwRule::TR: return "tr";
    case RwRule::TSR: return "tsr";
    case RwRule::TRR: return "trr";
    case RwRule::TLR: return "tlr";
    case RwRule::TT: return "tt";
  }
  return "?";
}

std::optional<RwRule> rw_rule_from_name(const std::string& name) {
  for (RwRule r : {RwRule::SR, RwRule::SS, RwRule::TR, RwRule::TSR, RwRule::TRR, RwRule::TLR,
                   RwRule::TT})
    if (rw_rule_name(r) == name) return r;
  return std::nullopt;
}

std::string path_position_to_string(const PathPosition& at) {
  if (at.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (i) out += '.';
    switch (at[i]) {
      case PathTag::First: out += "first"; break;
      case PathTag::Second: out += "second"; break;
      case PathTag::Inner: out += "inner"; break;
    }
  }
  return out;
}

PathPosition path_position_from_string(const std::string& text) {
  PathPosition at;
  if (text.empty() || text == "root") return at;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string tag = text.substr(start, dot == std::string::npos ? dot : dot - start);
    if (tag == "first")
      at.push_back(PathTag::First);
    else if (tag == "second")
      at.push_back(PathTag::Second);
    else if (tag == "inner")
      at.push_back(PathTag::Inner);
    else
      throw InvalidPosition("bad path-position tag '" + tag + "'");
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return at;
}

PathPtr subpath_at(const PathPtr& p, const PathPosition& at) {
  PathPtr cur = p;
  for (PathTag tag : at) {
    switch (tag) {
      case PathTag::Inner:
        if (cur->kind != PathKind::Sigma) throw InvalidPosition("inner: not a sigma node");
        cur = cur->a;
        break;
      case PathTag::First:
        if (cur->kind != PathKind::Tau) throw InvalidPosition("first: not a tau node");
        cur = cur->a;
        break;
      case PathTag::Second:
        if (cur->kind != PathKind::Tau) throw InvalidPosition("second: not a tau node");
        cur = cur->b;
        break;
    }
  }
  return cur;
}

static PathPtr replace_rec(const PathPtr& p, const PathPosition& at, std::size_t i,
                           const PathPtr& replacement) {
  if (i == at.size()) return replacement;
  switch (at[i]) {
    case PathTag::Inner:
      if (p->kind != PathKind::Sigma) throw InvalidPosition("inner: not a sigma node");
      return raw::sigma(replace_rec(p->a, at, i + 1, replacement));
    case PathTag::First:
      if (p->kind != PathKind::Tau) throw InvalidPosition("first: not a tau node");
      return raw::tau(replace_rec(p->a, at, i + 1, replacement), p->b);
    case PathTag::Second:
      if (p->kind != PathKind::Tau) throw InvalidPosition("second: not a tau node");
      return raw::tau(p->a, replace_rec(p->b, at, i + 1, replacement));
  }
  throw InvalidPosition();
}

PathPtr replace_subpath(const PathPtr& p, const PathPosition& at, const PathPtr& replacement) {
  return replace_rec(p, at, 0, replacement);
}

RwStep invert_step(const RwStep& s) { return {s.after, s.before, s.rule, s.at, !s.reversed}; }

// ---- matching and contraction ----

static bool matches(const PathPtr& p, RwRule rule) {
  switch (rule) {
    case RwRule::SR:
      return p->kind == PathKind::Sigma && p->a->kind == PathKind::Rho;
    case RwRule::SS:
      return p->kind == PathKind::Sigma && p->a->kind == PathKind::Sigma;
    case RwRule::TR:
      return p->kind == PathKind::Tau && p->b->kind == PathKind::Sigma &&
             path_eq(p->b->a, p->a);
    case RwRule::TSR:
      return p->kind == PathKind::Tau && p->a->kind == PathKind::Sigma &&
             path_eq(p->a->a, p->b);
    case RwRule::TRR:
      return p->kind == PathKind::Tau && p->b->kind == PathKind::Rho;
    case RwRule::TLR:
      return p->kind == PathKind::Tau && p->a->kind == PathKind::Rho;
    case RwRule::TT:
      return p->kind == PathKind::Tau && p->a->kind == PathKind::Tau;
  }
  return false;
}

namespace {
std::optional<RwRule> g_fault;
}

void set_rule_fault(std::optional<RwRule> rule) { g_fault = rule; }
std::optional<RwRule> rule_fault() { return g_fault; }

// Deliberately wrong right-hand sides, used only under fault injection.
static PathPtr corrupt_contractum(const PathPtr& p, RwRule rule) {
  switch (rule) {
    case RwRule::SR:
    case RwRule::TT:
      return p;  // no progress: shows up as a termination failure
    case RwRule::SS:
      return p->a;  // one sigma too many left behind
    case RwRule::TR:
      return mk_rho(p->a->dst);
    case RwRule::TSR:
      return mk_rho(p->b->src);
    case RwRule::TRR:
      return mk_rho(p->src);
    case RwRule::TLR:
      return mk_rho(p->dst);
  }
  return p;
}

static PathPtr contract_here(const PathPtr& p, RwRule rule) {
  if (!matches(p, rule))
    throw RuleMismatch("rule " + rw_rule_name(rule) + " does not match");
  if (g_fault && *g_fault == rule) return corrupt_contractum(p, rule);
  switch (rule) {
    case RwRule::SR: return p->a;                    // σ(ρ_a) ▷ ρ_a
    case RwRule::SS: return p->a->a;                 // σ(σ(r)) ▷ r
    case RwRule::TR: return mk_rho(p->a->src);       // τ(r,σ(r)) ▷ ρ at src(r)
    case RwRule::TSR: return mk_rho(p->b->dst);      // τ(σ(r),r) ▷ ρ at dst(r)
    case RwRule::TRR: return p->a;                   // τ(r,ρ) ▷ r
    case RwRule::TLR: return p->b;                   // τ(ρ,r) ▷ r
    case RwRule::TT:                                 // τ(τ(t,r),s) ▷ τ(t,τ(r,s))
      return raw::tau(p->a->a, raw::tau(p->a->b, p->b));
  }
  throw RuleMismatch();
}

PathPtr rw_contract(const PathPtr& p, RwRule rule, const PathPosition& at) {
  PathPtr sub = subpath_at(p, at);
  return replace_subpath(p, at, contract_here(sub, rule));
}

static const RwRule kAllRules[] = {RwRule::SR,  RwRule::SS,  RwRule::TR, RwRule::TSR,
                                   RwRule::TRR, RwRule::TLR, RwRule::TT};

static void redexes_rec(const PathPtr& p, PathPosition& at, bool outermost_first,
                        std::vector<std::pair<RwRule, PathPosition>>& out) {
  auto here = [&] {
    for (RwRule r : kAllRules)
      if (matches(p, r)) out.emplace_back(r, at);
  };
  auto children = [&] {
    if (p->kind == PathKind::Sigma) {
      at.push_back(PathTag::Inner);
      redexes_rec(p->a, at, outermost_first, out);
      at.pop_back();
    } else if (p->kind == PathKind::Tau) {
      at.push_back(PathTag::First);
      redexes_rec(p->a, at, outermost_first, out);
      at.pop_back();
      at.push_back(PathTag::Second);
      redexes_rec(p->b, at, outermost_first, out);
      at.pop_back();
    }
  };
  if (outermost_first) {
    here();
    children();
  } else {
    children();
    here();
  }
}

std::vector<std::pair<RwRule, PathPosition>> rw_redexes(const PathPtr& p) {
  std::vector<std::pair<RwRule, PathPosition>> out;
  PathPosition at;
  redexes_rec(p, at, true, out);
  return out;
}

static std::vector<std::pair<RwRule, PathPosition>> rw_redexes_innermost(const PathPtr& p) {
  std::vector<std::pair<RwRule, PathPosition>> out;
  PathPosition at;
  redexes_rec(p, at, false, out);
  return out;
}

// ---- normalization ----

std::pair<PathPtr, RwSequence> rw_normalize(const PathPtr& p, const Strategy& strategy) {
  const std::size_t sz = path_size(p);
  const std::size_t budget = 10 * sz * sz;
  std::mt19937_64 rng(strategy.seed);

  RwSequence seq;
  seq.start = p;
  PathPtr cur = p;
  for (std::size_t step = 0;; ++step) {
    auto redexes = strategy.kind == Strategy::Kind::LeftmostInnermost ? rw_redexes_innermost(cur)
                                                                      : rw_redexes(cur);
    if (redexes.empty()) break;
    if (step >= budget)
      throw BudgetExceeded("no normal form within " + std::to_string(budget) + " steps");
    std::size_t pick = 0;
    if (strategy.kind == Strategy::Kind::Random)
      pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng);
    const auto& [rule, at] = redexes[pick];
    PathPtr next = rw_contract(cur, rule, at);
    seq.steps.push_back({cur, next, rule, at, false});
    cur = next;
  }
  return {cur, std::move(seq)};
}

std::optional<RwSequence> rw_equal(const PathPtr& p, const PathPtr& q) {
  if (!alpha_eq(p->src, q->src) || !alpha_eq(p->dst, q->dst)) return std::nullopt;
  auto [nf_p, trace_p] = rw_normalize(p, Strategy::lo());
  auto [nf_q, trace_q] = rw_normalize(q, Strategy::lo());
  if (!path_eq(nf_p, nf_q)) return std::nullopt;
  RwSequence cert;
  cert.start = p;
  cert.steps = trace_p.steps;
  for (std::size_t i = trace_q.steps.size(); i-- > 0;)
    cert.steps.push_back(invert_step(trace_q.steps[i]));
  return cert;
}

bool replay(const RwSequence& seq) {
  PathPtr cur = seq.start;
  for (const RwStep& s : seq.steps) {
    if (!path_eq(cur, s.before)) return false;
    auto [bs, bd] = endpoints(s.before);
    auto [as, ad] = endpoints(s.after);
    if (!alpha_eq(bs, as) || !alpha_eq(bd, ad)) return false;
    try {
      const PathPtr& redex_side = s.reversed ? s.after : s.before;
      const PathPtr& result_side = s.reversed ? s.before : s.after;
      if (!path_eq(rw_contract(redex_side, s.rule, s.at), result_side)) return false;
    } catch (const Error&) {
      return false;
    }
    cur = s.after;
  }
  return true;
}

RewriteGraph rewrite_graph(const PathPtr& p, std::size_t cap) {
  RewriteGraph g;
  std::unordered_map<std::string, std::size_t> index;
  g.nodes.push_back(p);
  index[path_skeleton(p)] = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    auto redexes = rw_redexes(g.nodes[i]);
    if (redexes.empty()) g.sinks.push_back(i);
    for (const auto& [rule, at] : redexes) {
      PathPtr next = rw_contract(g.nodes[i], rule, at);
      std::string key = path_skeleton(next);
      auto it = index.find(key);
      std::size_t j;
      if (it == index.end()) {
        if (g.nodes.size() >= cap) throw CapExceeded();
        j = g.nodes.size();
        g.nodes.push_back(next);
        index.emplace(std::move(key), j);
      } else {
        j = it->second;
      }
      g.edges.push_back({i, j, rule, at});
    }
  }
  return g;
}

std::uint64_t path_digest(const PathPtr& p) {
  std::string s = path_skeleton(p);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_trace(const RwSequence& seq) {
  std::string out;
  char buf[2 * 16 + 1];
  auto hex = [&](std::uint64_t v) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
  };
  for (const RwStep& s : seq.steps) {
    out += rw_rule_name(s.rule);
    if (s.reversed) out += "^-1";
    out += " @ ";
    out += path_position_to_string(s.at);
    out += " : ";
    out += hex(path_digest(s.before));
    out += " -> ";
    out += hex(path_digest(s.after));
    out += '\n';
  }
  return out;
}

}  // namespace pathrw
