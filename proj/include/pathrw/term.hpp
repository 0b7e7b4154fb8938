#ifndef PATHRW_TERM_HPP
#define PATHRW_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pathrw/errors.hpp"

namespace pathrw {

/// Untyped λ-terms with nameless (index-based) binders.  Display names are
/// decoration: equality ignores them, so structural equality *is*
/// α-equivalence.  Free variables are identified by name.
enum class TermKind { Var, Free, Abs, App };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  int index = 0;      // Var: binder distance
  std::string name;   // Free: identifier; Abs: binder display hint
  TermPtr a, b;       // Abs: body in a; App: fn in a, arg in b
};

TermPtr mk_var(int index);
TermPtr mk_free(std::string name);
TermPtr mk_abs(std::string binder_hint, TermPtr body);
TermPtr mk_app(TermPtr fn, TermPtr arg);

/// α-equivalence: nameless skeletons identical (free names compared literally).
bool alpha_eq(const TermPtr& x, const TermPtr& y);

std::size_t term_size(const TermPtr& t);
std::set<std::string> free_names(const TermPtr& t);
bool uses_index(const TermPtr& t, int index);

/// Canonical display-name-free serialization; equal strings iff alpha_eq.
std::string term_skeleton(const TermPtr& t);

/// Addresses a subterm from the root: body descends an Abs, fn/arg an App.
enum class PosTag : std::uint8_t { Body, Fn, Arg };
using Position = std::vector<PosTag>;

std::string position_to_string(const Position& pos);       // "fn.body.arg", "" for root
Position position_from_string(const std::string& text);

TermPtr subterm_at(const TermPtr& t, const Position& pos);  // throws InvalidPosition
TermPtr replace_at(const TermPtr& t, const Position& pos, const TermPtr& replacement);

enum class StepKind : std::uint8_t { Beta, Eta };

std::string step_kind_name(StepKind k);  // "beta" / "eta"

/// [N/x]M with capture-avoiding index shifts; binder index 0 of `body` is the
/// substitution target.
TermPtr substitute(const TermPtr& body, const TermPtr& arg);

bool is_redex(const TermPtr& t, StepKind kind);

/// One-step β/η contraction of the redex at `pos`.
/// Throws InvalidPosition / NotARedex.
TermPtr contract(const TermPtr& t, const Position& pos, StepKind kind);

/// All redex positions in deterministic leftmost-outermost (pre-order) order.
std::vector<std::pair<Position, StepKind>> find_redexes(const TermPtr& t);

struct ConvStep {
  TermPtr source;   // source of the (forward-read) contraction
  Position pos;
  StepKind kind;
  bool reversed;    // true: the chain traverses this contraction backwards
};

/// Fueled search for a common reduct of m and n; returns the zig-zag
/// conversion sequence (forward steps from m, then reversed steps to n) or
/// nullopt.  Absence does not prove inequality.
std::optional<std::vector<ConvStep>> conversion_search(const TermPtr& m, const TermPtr& n,
                                                       unsigned fuel);

struct ParseOptions {
  bool strict = false;                       // reject unbound identifiers...
  std::set<std::string> free_context = {};   // ...except those declared here
};

TermPtr parse_term(const std::string& text, const ParseOptions& opts = {});

/// Round-trippable printing; `lambda_glyph` is "\\" (surface grammar) or "λ"
/// (display notation).
std::string print_term(const TermPtr& t, const std::string& lambda_glyph = "\\");

}  // namespace pathrw

#endif
