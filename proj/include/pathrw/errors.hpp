#ifndef PATHRW_ERRORS_HPP
#define PATHRW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathrw {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct UnboundIdentifier : ParseError {
  UnboundIdentifier(const std::string& name, std::size_t off)
      : ParseError("unbound identifier '" + name + "'", off) {}
};

struct InvalidPosition : Error {
  explicit InvalidPosition(const std::string& what = "position does not address a subterm")
      : Error(what) {}
};

struct NotARedex : Error {
  explicit NotARedex(const std::string& what = "subterm is not a redex of the requested kind")
      : Error(what) {}
};

struct EndpointMismatch : Error {
  explicit EndpointMismatch(const std::string& what = "endpoints do not meet") : Error(what) {}
};

struct BrokenChain : Error {
  explicit BrokenChain(const std::string& what = "conversion steps do not chain") : Error(what) {}
};

struct RuleMismatch : Error {
  explicit RuleMismatch(const std::string& what = "rule pattern does not match") : Error(what) {}
};

struct IllFormedPath : Error {
  explicit IllFormedPath(const std::string& what = "path is not well-formed") : Error(what) {}
};

// A rewrite run exceeded its step budget.  For the uncorrupted rule set this
// would be a termination counterexample and must never happen.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what = "rewrite step budget exceeded") : Error(what) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what = "rewrite graph node cap exceeded") : Error(what) {}
};

}  // namespace pathrw

#endif
