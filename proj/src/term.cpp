#include "pathrw/term.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace pathrw {

TermPtr mk_var(int index) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->index = index;
  return t;
}

TermPtr mk_free(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Free;
  t->name = std::move(name);
  return t;
}

TermPtr mk_abs(std::string binder_hint, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Abs;
  t->name = std::move(binder_hint);
  t->a = std::move(body);
  return t;
}

TermPtr mk_app(TermPtr fn, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->a = std::move(fn);
  t->b = std::move(arg);
  return t;
}

bool alpha_eq(const TermPtr& x, const TermPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TermKind::Var: return x->index == y->index;
    case TermKind::Free: return x->name == y->name;
    case TermKind::Abs: return alpha_eq(x->a, y->a);
    case TermKind::App: return alpha_eq(x->a, y->a) && alpha_eq(x->b, y->b);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Free: return 1;
    case TermKind::Abs: return 1 + term_size(t->a);
    case TermKind::App: return 1 + term_size(t->a) + term_size(t->b);
  }
  return 0;
}

static void collect_free(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var: break;
    case TermKind::Free: out.insert(t->name); break;
    case TermKind::Abs: collect_free(t->a, out); break;
    case TermKind::App:
      collect_free(t->a, out);
      collect_free(t->b, out);
      break;
  }
}

std::set<std::string> free_names(const TermPtr& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

bool uses_index(const TermPtr& t, int index) {
  switch (t->kind) {
    case TermKind::Var: return t->index == index;
    case TermKind::Free: return false;
    case TermKind::Abs: return uses_index(t->a, index + 1);
    case TermKind::App: return uses_index(t->a, index) || uses_index(t->b, index);
  }
  return false;
}

static void skeleton_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += 'v';
      out += std::to_string(t->index);
      break;
    case TermKind::Free:
      out += 'f';
      out += t->name;
      out += ';';
      break;
    case TermKind::Abs:
      out += "L(";
      skeleton_rec(t->a, out);
      out += ')';
      break;
    case TermKind::App:
      out += "A(";
      skeleton_rec(t->a, out);
      out += ',';
      skeleton_rec(t->b, out);
      out += ')';
      break;
  }
}

std::string term_skeleton(const TermPtr& t) {
  std::string out;
  skeleton_rec(t, out);
  return out;
}

std::string position_to_string(const Position& pos) {
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += '.';
    switch (pos[i]) {
      case PosTag::Body: out += "body"; break;
      case PosTag::Fn: out += "fn"; break;
      case PosTag::Arg: out += "arg"; break;
    }
  }
  return out;
}

Position position_from_string(const std::string& text) {
  Position pos;
  if (text.empty()) return pos;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string tag = text.substr(start, dot == std::string::npos ? dot : dot - start);
    if (tag == "body")
      pos.push_back(PosTag::Body);
    else if (tag == "fn")
      pos.push_back(PosTag::Fn);
    else if (tag == "arg")
      pos.push_back(PosTag::Arg);
    else
      throw InvalidPosition("bad position tag '" + tag + "'");
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return pos;
}

TermPtr subterm_at(const TermPtr& t, const Position& pos) {
  TermPtr cur = t;
  for (PosTag tag : pos) {
    switch (tag) {
      case PosTag::Body:
        if (cur->kind != TermKind::Abs) throw InvalidPosition();
        cur = cur->a;
        break;
      case PosTag::Fn:
        if (cur->kind != TermKind::App) throw InvalidPosition();
        cur = cur->a;
        break;
      case PosTag::Arg:
        if (cur->kind != TermKind::App) throw InvalidPosition();
        cur = cur->b;
        break;
    }
  }
  return cur;
}

static TermPtr replace_rec(const TermPtr& t, const Position& pos, std::size_t i,
                           const TermPtr& replacement) {
  if (i == pos.size()) return replacement;
  switch (pos[i]) {
    case PosTag::Body:
      if (t->kind != TermKind::Abs) throw InvalidPosition();
      return mk_abs(t->name, replace_rec(t->a, pos, i + 1, replacement));
    case PosTag::Fn:
      if (t->kind != TermKind::App) throw InvalidPosition();
      return mk_app(replace_rec(t->a, pos, i + 1, replacement), t->b);
    case PosTag::Arg:
      if (t->kind != TermKind::App) throw InvalidPosition();
      return mk_app(t->a, replace_rec(t->b, pos, i + 1, replacement));
  }
  throw InvalidPosition();
}

TermPtr replace_at(const TermPtr& t, const Position& pos, const TermPtr& replacement) {
  return replace_rec(t, pos, 0, replacement);
}

std::string step_kind_name(StepKind k) { return k == StepKind::Beta ? "beta" : "eta"; }

// Indices >= cutoff shifted by `by`.
static TermPtr shift(const TermPtr& t, int by, int cutoff) {
  switch (t->kind) {
    case TermKind::Var:
      return t->index >= cutoff ? mk_var(t->index + by) : t;
    case TermKind::Free:
      return t;
    case TermKind::Abs:
      return mk_abs(t->name, shift(t->a, by, cutoff + 1));
    case TermKind::App:
      return mk_app(shift(t->a, by, cutoff), shift(t->b, by, cutoff));
  }
  return t;
}

static TermPtr subst_rec(const TermPtr& body, const TermPtr& arg, int depth) {
  switch (body->kind) {
    case TermKind::Var:
      if (body->index == depth) return shift(arg, depth, 0);
      if (body->index > depth) return mk_var(body->index - 1);
      return body;
    case TermKind::Free:
      return body;
    case TermKind::Abs:
      return mk_abs(body->name, subst_rec(body->a, arg, depth + 1));
    case TermKind::App:
      return mk_app(subst_rec(body->a, arg, depth), subst_rec(body->b, arg, depth));
  }
  return body;
}

TermPtr substitute(const TermPtr& body, const TermPtr& arg) { return subst_rec(body, arg, 0); }

bool is_redex(const TermPtr& t, StepKind kind) {
  if (kind == StepKind::Beta)
    return t->kind == TermKind::App && t->a->kind == TermKind::Abs;
  // η: λx.M x with x not free in M
  return t->kind == TermKind::Abs && t->a->kind == TermKind::App &&
         t->a->b->kind == TermKind::Var && t->a->b->index == 0 && !uses_index(t->a->a, 0);
}

static TermPtr contract_here(const TermPtr& t, StepKind kind) {
  if (!is_redex(t, kind)) throw NotARedex("not a " + step_kind_name(kind) + "-redex");
  if (kind == StepKind::Beta) return substitute(t->a->a, t->b);
  return shift(t->a->a, -1, 0);
}

TermPtr contract(const TermPtr& t, const Position& pos, StepKind kind) {
  TermPtr sub = subterm_at(t, pos);
  return replace_at(t, pos, contract_here(sub, kind));
}

static void find_redexes_rec(const TermPtr& t, Position& pos,
                             std::vector<std::pair<Position, StepKind>>& out) {
  if (is_redex(t, StepKind::Beta)) out.emplace_back(pos, StepKind::Beta);
  if (is_redex(t, StepKind::Eta)) out.emplace_back(pos, StepKind::Eta);
  switch (t->kind) {
    case TermKind::Abs:
      pos.push_back(PosTag::Body);
      find_redexes_rec(t->a, pos, out);
      pos.pop_back();
      break;
    case TermKind::App:
      pos.push_back(PosTag::Fn);
      find_redexes_rec(t->a, pos, out);
      pos.pop_back();
      pos.push_back(PosTag::Arg);
      find_redexes_rec(t->b, pos, out);
      pos.pop_back();
      break;
    default:
      break;
  }
}

std::vector<std::pair<Position, StepKind>> find_redexes(const TermPtr& t) {
  std::vector<std::pair<Position, StepKind>> out;
  Position pos;
  find_redexes_rec(t, pos, out);
  return out;
}

// η-redexes take priority over β so that conversion chains match the reference
// β/η sequence for terms like (λx.(λy.yx)(λw.zw))v; ties broken by the
// leftmost-outermost order of find_redexes.
static std::optional<std::pair<Position, StepKind>> pick_redex(const TermPtr& t) {
  auto redexes = find_redexes(t);
  if (redexes.empty()) return std::nullopt;
  for (const auto& r : redexes)
    if (r.second == StepKind::Eta) return r;
  return redexes.front();
}

std::optional<std::vector<ConvStep>> conversion_search(const TermPtr& m, const TermPtr& n,
                                                       unsigned fuel) {
  struct Trace {
    std::vector<TermPtr> terms;
    std::vector<std::pair<Position, StepKind>> steps;  // steps[i]: terms[i] -> terms[i+1]
  };
  auto reduce = [&](const TermPtr& start) {
    Trace tr;
    tr.terms.push_back(start);
    for (unsigned i = 0; i < fuel; ++i) {
      auto r = pick_redex(tr.terms.back());
      if (!r) break;
      tr.steps.push_back(*r);
      tr.terms.push_back(contract(tr.terms.back(), r->first, r->second));
    }
    return tr;
  };
  Trace tm = reduce(m);
  Trace tn = reduce(n);

  std::unordered_map<std::string, std::size_t> n_index;
  for (std::size_t j = tn.terms.size(); j-- > 0;) n_index[term_skeleton(tn.terms[j])] = j;

  for (std::size_t i = 0; i < tm.terms.size(); ++i) {
    auto it = n_index.find(term_skeleton(tm.terms[i]));
    if (it == n_index.end()) continue;
    std::size_t j = it->second;
    std::vector<ConvStep> out;
    for (std::size_t k = 0; k < i; ++k)
      out.push_back({tm.terms[k], tm.steps[k].first, tm.steps[k].second, false});
    // n-side contractions traversed backwards, from the common reduct up to n
    for (std::size_t k = j; k-- > 0;)
      out.push_back({tn.terms[k], tn.steps[k].first, tn.steps[k].second, true});
    return out;
  }
  return std::nullopt;
}

// ---- parsing ----

namespace {

class TermParser {
 public:
  TermParser(const std::string& text, const ParseOptions& opts) : text_(text), opts_(opts) {}

  TermPtr parse() {
    TermPtr t = parse_term_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  const std::string& text_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;  // innermost last

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_lambda() {
    if (pos_ < text_.size() && text_[pos_] == '\\') return true;
    // accept the two-byte UTF-8 encoding of 'λ'
    return pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xCE &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0xBB;
  }

  void eat_lambda() { pos_ += text_[pos_] == '\\' ? 1 : 2; }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected identifier", pos_);
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  TermPtr parse_term_expr() {
    skip_ws();
    if (at_lambda()) {
      eat_lambda();
      std::size_t at = pos_;
      std::string name = parse_ident();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '.') throw ParseError("expected '.'", pos_);
      ++pos_;
      binders_.push_back(name);
      TermPtr body = parse_term_expr();
      binders_.pop_back();
      (void)at;
      return mk_abs(name, body);
    }
    return parse_application();
  }

  TermPtr parse_application() {
    TermPtr t = parse_atom_required();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ')' || c == ',') break;
      if (at_lambda()) {
        // an abstraction in argument position must be parenthesized; treating
        // it as the final argument would swallow the rest of the input
        throw ParseError("abstraction must be parenthesized in application", pos_);
      }
      if (c != '(' && !std::isalpha(static_cast<unsigned char>(c)))
        throw ParseError("unexpected character", pos_);
      t = mk_app(t, parse_atom_required());
    }
    return t;
  }

  TermPtr parse_atom_required() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      TermPtr t = parse_term_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    std::size_t at = pos_;
    std::string name = parse_ident();
    for (std::size_t i = binders_.size(); i-- > 0;)
      if (binders_[i] == name) return mk_var(static_cast<int>(binders_.size() - 1 - i));
    if (opts_.strict && !opts_.free_context.count(name)) throw UnboundIdentifier(name, at);
    return mk_free(name);
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, const ParseOptions& opts) {
  return TermParser(text, opts).parse();
}

// ---- printing ----

namespace {

std::string fresh_name(const std::string& hint, const std::set<std::string>& taken) {
  std::string base = hint.empty() ? "x" : hint;
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

void print_rec(const TermPtr& t, std::vector<std::string>& binders, std::set<std::string>& taken,
               const std::string& lam, bool parenthesize_abs, bool parenthesize_app,
               std::string& out) {
  switch (t->kind) {
    case TermKind::Var: {
      if (static_cast<std::size_t>(t->index) >= binders.size()) {
        out += '#';
        out += std::to_string(t->index);  // dangling index, not printable as a name
        break;
      }
      std::size_t i = binders.size() - 1 - static_cast<std::size_t>(t->index);
      out += binders[i];
      break;
    }
    case TermKind::Free:
      out += t->name;
      break;
    case TermKind::Abs: {
      if (parenthesize_abs) out += '(';
      std::string name = fresh_name(t->name, taken);
      out += lam;
      out += name;
      out += '.';
      binders.push_back(name);
      bool inserted = taken.insert(name).second;
      print_rec(t->a, binders, taken, lam, false, false, out);
      binders.pop_back();
      if (inserted) taken.erase(name);
      if (parenthesize_abs) out += ')';
      break;
    }
    case TermKind::App: {
      if (parenthesize_app) out += '(';
      print_rec(t->a, binders, taken, lam, true, false, out);
      out += ' ';
      print_rec(t->b, binders, taken, lam, true, true, out);
      if (parenthesize_app) out += ')';
      break;
    }
  }
}

}  // namespace

std::string print_term(const TermPtr& t, const std::string& lambda_glyph) {
  std::string out;
  std::vector<std::string> binders;
  std::set<std::string> taken = free_names(t);
  print_rec(t, binders, taken, lambda_glyph, false, false, out);
  return out;
}

}  // namespace pathrw
