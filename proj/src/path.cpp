#include "pathrw/path.hpp"

#include <cctype>

namespace pathrw {

namespace raw {

PathPtr atomic(const TermPtr& source, const TermPtr& target, const Position& pos, StepKind kind) {
  auto p = std::make_shared<Path>();
  p->kind = PathKind::Atomic;
  p->src = source;
  p->dst = target;
  p->pos = pos;
  p->step = kind;
  return p;
}

PathPtr sigma(const PathPtr& inner) {
  auto p = std::make_shared<Path>();
  p->kind = PathKind::Sigma;
  p->src = inner->dst;
  p->dst = inner->src;
  p->a = inner;
  return p;
}

PathPtr tau(const PathPtr& first, const PathPtr& second) {
  auto p = std::make_shared<Path>();
  p->kind = PathKind::Tau;
  p->src = first->src;
  p->dst = second->dst;
  p->a = first;
  p->b = second;
  return p;
}

}  // namespace raw

PathPtr mk_atomic(const TermPtr& source, const Position& pos, StepKind kind) {
  TermPtr target = contract(source, pos, kind);  // throws if not a redex there
  return raw::atomic(source, target, pos, kind);
}

PathPtr mk_rho(const TermPtr& at) {
  auto p = std::make_shared<Path>();
  p->kind = PathKind::Rho;
  p->src = at;
  p->dst = at;
  return p;
}

PathPtr mk_sigma(const PathPtr& inner) { return raw::sigma(inner); }

PathPtr mk_tau(const PathPtr& first, const PathPtr& second) {
  if (!alpha_eq(first->dst, second->src))
    throw EndpointMismatch("tau: dst of first path is not the src of the second");
  return raw::tau(first, second);
}

std::pair<TermPtr, TermPtr> endpoints(const PathPtr& p) { return {p->src, p->dst}; }

bool path_eq(const PathPtr& p, const PathPtr& q) {
  if (p.get() == q.get()) return true;
  if (p->kind != q->kind) return false;
  switch (p->kind) {
    case PathKind::Atomic:
      return p->step == q->step && p->pos == q->pos && alpha_eq(p->src, q->src);
    case PathKind::Rho:
      return alpha_eq(p->src, q->src);
    case PathKind::Sigma:
      return path_eq(p->a, q->a);
    case PathKind::Tau:
      return path_eq(p->a, q->a) && path_eq(p->b, q->b);
  }
  return false;
}

std::size_t path_size(const PathPtr& p) {
  switch (p->kind) {
    case PathKind::Atomic:
    case PathKind::Rho: return 1;
    case PathKind::Sigma: return 1 + path_size(p->a);
    case PathKind::Tau: return 1 + path_size(p->a) + path_size(p->b);
  }
  return 0;
}

bool well_formed(const PathPtr& p) {
  switch (p->kind) {
    case PathKind::Atomic: {
      TermPtr sub;
      try {
        sub = contract(p->src, p->pos, p->step);
      } catch (const Error&) {
        return false;
      }
      return alpha_eq(sub, p->dst);
    }
    case PathKind::Rho:
      return alpha_eq(p->src, p->dst);
    case PathKind::Sigma:
      return well_formed(p->a) && alpha_eq(p->src, p->a->dst) && alpha_eq(p->dst, p->a->src);
    case PathKind::Tau:
      return well_formed(p->a) && well_formed(p->b) && alpha_eq(p->a->dst, p->b->src) &&
             alpha_eq(p->src, p->a->src) && alpha_eq(p->dst, p->b->dst);
  }
  return false;
}

std::string path_skeleton(const PathPtr& p) {
  switch (p->kind) {
    case PathKind::Atomic:
      return (p->step == StepKind::Beta ? "B@" : "E@") + position_to_string(p->pos) + "[" +
             term_skeleton(p->src) + "]";
    case PathKind::Rho:
      return "R[" + term_skeleton(p->src) + "]";
    case PathKind::Sigma:
      return "S(" + path_skeleton(p->a) + ")";
    case PathKind::Tau:
      return "T(" + path_skeleton(p->a) + "," + path_skeleton(p->b) + ")";
  }
  return "";
}

PathPtr path_of_conversion(const TermPtr& m, const std::vector<ConvStep>& steps) {
  if (steps.empty()) return mk_rho(m);
  PathPtr acc;
  TermPtr cursor = m;
  for (const ConvStep& s : steps) {
    PathPtr leg;
    if (!s.reversed) {
      if (!alpha_eq(cursor, s.source)) throw BrokenChain();
      leg = mk_atomic(s.source, s.pos, s.kind);
    } else {
      PathPtr fwd = mk_atomic(s.source, s.pos, s.kind);
      if (!alpha_eq(cursor, fwd->dst)) throw BrokenChain();
      leg = mk_sigma(fwd);
    }
    cursor = leg->dst;
    acc = acc ? mk_tau(acc, leg) : leg;
  }
  return acc;
}

// ---- printing ----

namespace {

const char* kGreek[] = {"ρ", "σ", "τ", "β", "η"};

std::string wrapper_chain_open(const Position& pos, std::string& closers) {
  // ξ for descending a binder, ν for the function side, μ for the argument side
  std::string out;
  for (PosTag tag : pos) {
    switch (tag) {
      case PosTag::Body: out += "ξ("; break;
      case PosTag::Fn: out += "ν("; break;
      case PosTag::Arg: out += "μ("; break;
    }
    closers += ')';
  }
  return out;
}

void print_rec(const PathPtr& p, PathStyle style, std::string& out) {
  const bool compact = style == PathStyle::Compact;
  switch (p->kind) {
    case PathKind::Atomic: {
      if (compact) {
        out += step_kind_name(p->step);
        out += '@';
        out += position_to_string(p->pos);
        out += '(';
        out += print_term(p->src);
        out += ')';
      } else {
        std::string closers;
        if (style == PathStyle::Annotated) out += wrapper_chain_open(p->pos, closers);
        out += p->step == StepKind::Beta ? kGreek[3] : kGreek[4];
        out += '(';
        out += print_term(p->src, "λ");
        out += ',';
        out += print_term(p->dst, "λ");
        out += ')';
        out += closers;
      }
      break;
    }
    case PathKind::Rho:
      out += compact ? "rho" : kGreek[0];
      out += '(';
      out += print_term(p->src, compact ? "\\" : "λ");
      out += ')';
      break;
    case PathKind::Sigma:
      out += compact ? "sigma" : kGreek[1];
      out += '(';
      print_rec(p->a, style, out);
      out += ')';
      break;
    case PathKind::Tau:
      out += compact ? "tau" : kGreek[2];
      out += '(';
      print_rec(p->a, style, out);
      out += ',';
      print_rec(p->b, style, out);
      out += ')';
      break;
  }
}

}  // namespace

std::string print_path(const PathPtr& p, PathStyle style) {
  std::string out;
  print_rec(p, style, out);
  return out;
}

// ---- parsing (Compact syntax) ----

namespace {

class PathParser {
 public:
  explicit PathParser(const std::string& text) : text_(text) {}

  PathPtr parse() {
    PathPtr p = parse_path_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string read_keyword() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected path constructor", pos_);
    return text_.substr(start, pos_ - start);
  }

  TermPtr parse_term_in_parens() {
    expect('(');
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      ++pos_;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", start);
    std::string inner = text_.substr(start, pos_ - 1 - start);
    try {
      return parse_term(inner);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in term: ") + e.what(), start + e.offset);
    }
  }

  Position parse_position() {
    // dot-separated tags between '@' and '('; empty means root
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '.'))
      ++pos_;
    std::string text = text_.substr(start, pos_ - start);
    try {
      return position_from_string(text);
    } catch (const InvalidPosition& e) {
      throw ParseError(e.what(), start);
    }
  }

  PathPtr parse_path_expr() {
    std::size_t at = pos_;
    std::string kw = read_keyword();
    if (kw == "rho") {
      return mk_rho(parse_term_in_parens());
    }
    if (kw == "beta" || kw == "eta") {
      expect('@');
      Position pos = parse_position();
      TermPtr t = parse_term_in_parens();
      // semantic failures (not a redex there) propagate as NotARedex, not ParseError
      return mk_atomic(t, pos, kw == "beta" ? StepKind::Beta : StepKind::Eta);
    }
    if (kw == "sigma") {
      expect('(');
      PathPtr inner = parse_path_expr();
      expect(')');
      return mk_sigma(inner);
    }
    if (kw == "tau") {
      expect('(');
      PathPtr first = parse_path_expr();
      expect(',');
      PathPtr second = parse_path_expr();
      expect(')');
      return mk_tau(first, second);  // EndpointMismatch propagates
    }
    throw ParseError("unknown path constructor '" + kw + "'", at);
  }
};

}  // namespace

PathPtr parse_path(const std::string& text) { return PathParser(text).parse(); }

}  // namespace pathrw
