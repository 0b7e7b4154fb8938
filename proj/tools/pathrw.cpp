// pathrw — command-line front end for the computational-path library.
//
// Subcommands:
//   path M N      derive an equality path between two λ-terms
//   normalize P   rewrite a path to normal form, printing the trace
//   check         run the categorical law checkers over random instances
//   gen           emit a reproducible corpus of random paths
//
// Exit codes: 0 success, 1 no conversion found, 2 parse error,
//             3 ill-formed path, 4 law failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "pathrw/catcheck.hpp"
#include "pathrw/corpus.hpp"

using namespace pathrw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoConversion = 1;
constexpr int kExitParse = 2;
constexpr int kExitIllFormed = 3;
constexpr int kExitLawFailure = 4;

PathStyle style_from_name(const std::string& name) {
  if (name == "compact") return PathStyle::Compact;
  if (name == "greek") return PathStyle::Greek;
  if (name == "annotated") return PathStyle::Annotated;
  throw CLI::ValidationError("--style", "unknown style '" + name + "'");
}

Strategy strategy_from_name(const std::string& name, std::uint64_t seed) {
  if (name == "lo") return Strategy::lo();
  if (name == "li") return Strategy::li();
  if (name == "random") return Strategy::random(seed);
  throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "'");
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---- path ----

struct PathArgs {
  std::string lhs, rhs;
  unsigned fuel = 64;
  std::string style = "greek";
  std::string format = "text";
};

int cmd_path(const PathArgs& args) {
  TermPtr m, n;
  try {
    m = parse_term(args.lhs);
    n = parse_term(args.rhs);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  auto steps = conversion_search(m, n, args.fuel);
  if (!steps) {
    std::cerr << "no conversion found within fuel " << args.fuel << "\n";
    return kExitNoConversion;
  }
  PathPtr p = path_of_conversion(m, *steps);
  if (args.format == "machine") {
    std::cout << "DERIV v1 " << steps->size() << " " << print_path(p, PathStyle::Compact)
              << "\n";
    for (const ConvStep& s : *steps)
      std::cout << "CSTEP v1 " << step_kind_name(s.kind) << " "
                << (s.pos.empty() ? "root" : position_to_string(s.pos)) << " "
                << (s.reversed ? "rev" : "fwd") << "\n";
  } else {
    std::cout << print_path(p, style_from_name(args.style)) << "\n";
  }
  return kExitOk;
}

// ---- normalize ----

struct NormalizeArgs {
  std::string input;
  std::string strategy = "lo";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string dot_file;
};

void write_dot(const RewriteGraph& g, const std::string& file) {
  std::ofstream out(file);
  out << "digraph rw {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << hex64(path_digest(g.nodes[i])) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << rw_rule_name(e.rule) << "@"
        << path_position_to_string(e.at) << "\"];\n";
  out << "}\n";
}

int cmd_normalize(const NormalizeArgs& args) {
  PathPtr p;
  try {
    p = parse_path(args.input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "ill-formed path: " << e.what() << "\n";
    return kExitIllFormed;
  }
  auto [nf, trace] = rw_normalize(p, strategy_from_name(args.strategy, args.seed));
  if (args.format == "machine") {
    for (const RwStep& s : trace.steps)
      std::cout << "STEP v1 " << rw_rule_name(s.rule) << " " << path_position_to_string(s.at)
                << " " << hex64(path_digest(s.before)) << " " << hex64(path_digest(s.after))
                << "\n";
    std::cout << "NF v1 " << print_path(nf, PathStyle::Compact) << "\n";
  } else {
    std::cout << format_trace(trace);
    std::cout << "normal form: " << print_path(nf, PathStyle::Compact) << "\n";
  }
  if (!args.dot_file.empty()) write_dot(rewrite_graph(p, 4096), args.dot_file);
  return kExitOk;
}

// ---- check ----

struct CheckArgs {
  std::string laws = "all";
  std::uint64_t seed = 7;
  std::size_t size = 50;
  unsigned depth = 4;
  std::string format = "text";
  std::string corrupt_rule;
};

bool law_selected(const std::string& selection, const std::string& law) {
  if (selection == "all") return true;
  std::size_t start = 0;
  while (start <= selection.size()) {
    std::size_t comma = selection.find(',', start);
    std::string item =
        selection.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item == law) return true;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return false;
}

void emit(const LawReport& rep, const std::string& format, std::size_t& failures) {
  if (!rep.pass) ++failures;
  bool gap = rep.detail.rfind("completeness gap", 0) == 0;
  if (format == "machine") {
    std::cout << "REPORT v1 " << rep.law << " " << (rep.pass ? "pass" : "fail") << "\n";
    if (gap) std::cout << "GAP v1 " << rep.law << " " << rep.detail << "\n";
  } else {
    std::cout << (rep.pass ? "pass" : "FAIL") << "  " << rep.law;
    if (!rep.detail.empty()) std::cout << "  [" << rep.detail << "]";
    std::cout << "\n";
    if (!rep.pass) std::cout << "      instance: " << rep.instance << "\n";
  }
}

int cmd_check(const CheckArgs& args) {
  if (!args.corrupt_rule.empty()) {
    auto rule = rw_rule_from_name(args.corrupt_rule);
    if (!rule) {
      std::cerr << "unknown rule '" << args.corrupt_rule << "'\n";
      return kExitParse;
    }
    set_rule_fault(*rule);
  }

  std::mt19937_64 rng(args.seed);
  std::size_t failures = 0;

  auto guarded = [&](const char* law, auto&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      LawReport rep;
      rep.law = law;
      rep.pass = false;
      rep.detail = std::string("termination failure: ") + e.what();
      emit(rep, args.format, failures);
    } catch (const Error& e) {
      LawReport rep;
      rep.law = law;
      rep.pass = false;
      rep.detail = e.what();
      emit(rep, args.format, failures);
    }
  };

  for (std::size_t i = 0; i < args.size; ++i) {
    TermPtr base = gen_term(rng, 4);
    if (law_selected(args.laws, "groupoid")) {
      guarded("groupoid", [&] {
        PathPtr p = gen_path_from(rng, base, args.depth);
        PathPtr q = gen_path_from(rng, p->dst, args.depth);
        PathPtr r = gen_path_from(rng, q->dst, args.depth);
        for (const LawReport& rep : check_groupoid(p, q, r)) emit(rep, args.format, failures);
      });
    }
    if (law_selected(args.laws, "vertical")) {
      guarded("vertical", [&] {
        PathPtr p = gen_path_from(rng, base, args.depth);
        auto [theta, rest] = split_cell(p, rng);
        auto [phi, psi] = split_cell(theta.target, rng);
        (void)rest;
        for (const LawReport& rep : check_2cat_vertical(theta, phi, psi))
          emit(rep, args.format, failures);
      });
    }
    if (law_selected(args.laws, "interchange")) {
      guarded("interchange", [&] {
        PathPtr p = gen_path_from(rng, base, args.depth);
        PathPtr r = gen_path_from(rng, p->dst, args.depth);
        auto [alpha, chi] = split_cell(p, rng);
        auto [theta, phi] = split_cell(r, rng);
        emit(check_interchange(alpha, chi, theta, phi), args.format, failures);
      });
    }
    if (law_selected(args.laws, "pentagon")) {
      guarded("pentagon", [&] {
        PathPtr s = gen_path_from(rng, base, args.depth);
        PathPtr r = gen_path_from(rng, s->dst, args.depth);
        PathPtr p = gen_path_from(rng, r->dst, args.depth);
        PathPtr u = gen_path_from(rng, p->dst, args.depth);
        emit(check_pentagon(s, r, p, u), args.format, failures);
      });
    }
    if (law_selected(args.laws, "triangle")) {
      guarded("triangle", [&] {
        PathPtr s = gen_path_from(rng, base, args.depth);
        PathPtr r = gen_path_from(rng, s->dst, args.depth);
        emit(check_triangle(s, r), args.format, failures);
      });
    }
  }

  set_rule_fault(std::nullopt);
  if (args.format == "machine")
    std::cout << "SUMMARY v1 failures " << failures << "\n";
  else
    std::cout << (failures ? "FAILED: " : "ok: ") << failures << " law failure(s)\n";
  return failures ? kExitLawFailure : kExitOk;
}

// ---- gen ----

struct GenArgs {
  std::uint64_t seed = 1;
  std::size_t size = 10;
  unsigned depth = 4;
};

int cmd_gen(const GenArgs& args) {
  CorpusOptions opts;
  opts.seed = args.seed;
  opts.size = args.size;
  opts.depth = args.depth;
  for (const PathPtr& p : gen_corpus(opts))
    std::cout << print_path(p, PathStyle::Compact) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational-path derivation and rewriting tool"};
  app.require_subcommand(1);

  PathArgs path_args;
  auto* path_cmd = app.add_subcommand("path", "derive an equality path between two terms");
  path_cmd->add_option("lhs", path_args.lhs, "left term")->required();
  path_cmd->add_option("rhs", path_args.rhs, "right term")->required();
  path_cmd->add_option("--fuel", path_args.fuel, "contraction fuel per side");
  path_cmd->add_option("--style", path_args.style, "compact|greek|annotated");
  path_cmd->add_option("--format", path_args.format, "text|machine");

  NormalizeArgs norm_args;
  auto* norm_cmd = app.add_subcommand("normalize", "rewrite a path to normal form");
  norm_cmd->add_option("path", norm_args.input, "path in compact syntax")->required();
  norm_cmd->add_option("--strategy", norm_args.strategy, "lo|li|random");
  norm_cmd->add_option("--seed", norm_args.seed, "seed for the random strategy");
  norm_cmd->add_option("--format", norm_args.format, "text|machine");
  norm_cmd->add_option("--dot", norm_args.dot_file, "write the rewrite graph as DOT");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "verify categorical laws on random instances");
  check_cmd->add_option("--laws", check_args.laws,
                        "comma list of groupoid,vertical,interchange,pentagon,triangle or all");
  check_cmd->add_option("--seed", check_args.seed, "corpus seed");
  check_cmd->add_option("--size", check_args.size, "instances per law");
  check_cmd->add_option("--depth", check_args.depth, "path constructor depth");
  check_cmd->add_option("--format", check_args.format, "text|machine");
  check_cmd->add_option("--corrupt-rule", check_args.corrupt_rule,
                        "inject a fault into one rewrite rule (sensitivity testing)");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "emit a reproducible random path corpus");
  gen_cmd->add_option("--seed", gen_args.seed, "corpus seed");
  gen_cmd->add_option("--size", gen_args.size, "number of paths");
  gen_cmd->add_option("--depth", gen_args.depth, "path constructor depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*path_cmd) return cmd_path(path_args);
    if (*norm_cmd) return cmd_normalize(norm_args);
    if (*check_cmd) return cmd_check(check_args);
    return cmd_gen(gen_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIllFormed;
  }
}
