#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pathrw/corpus.hpp"
#include "pathrw/path.hpp"

using namespace pathrw;

static PathPtr beta_root(const std::string& text) {
  return mk_atomic(parse_term(text), {}, StepKind::Beta);
}

TEST_CASE("constructors validate") {
  PathPtr b = beta_root("(\\x.x) u");
  CHECK(alpha_eq(b->src, parse_term("(\\x.x) u")));
  CHECK(alpha_eq(b->dst, parse_term("u")));

  CHECK_THROWS_AS(mk_atomic(parse_term("u v"), {}, StepKind::Beta), NotARedex);
  CHECK_THROWS_AS(mk_atomic(parse_term("(\\x.x) u"), {PosTag::Body}, StepKind::Beta),
                  InvalidPosition);

  PathPtr r = mk_rho(parse_term("w"));
  CHECK_THROWS_AS(mk_tau(b, r), EndpointMismatch);  // u vs w
  PathPtr ok = mk_tau(b, mk_rho(parse_term("u")));
  CHECK(alpha_eq(ok->src, b->src));
  CHECK(alpha_eq(ok->dst, parse_term("u")));
}

TEST_CASE("sigma swaps endpoints; double sigma restores them") {
  PathPtr b = beta_root("(\\x.x u) v");
  PathPtr s = mk_sigma(b);
  CHECK(alpha_eq(s->src, b->dst));
  CHECK(alpha_eq(s->dst, b->src));
  PathPtr ss = mk_sigma(s);
  auto [s0, d0] = endpoints(b);
  auto [s2, d2] = endpoints(ss);
  CHECK(alpha_eq(s0, s2));
  CHECK(alpha_eq(d0, d2));
}

TEST_CASE("well_formed rejects corrupted raw nodes") {
  PathPtr b = beta_root("(\\x.x) u");
  CHECK(well_formed(b));
  CHECK(well_formed(mk_sigma(b)));

  // wrong target term on an atomic node
  PathPtr bad_atomic = raw::atomic(b->src, parse_term("w"), {}, StepKind::Beta);
  CHECK_FALSE(well_formed(bad_atomic));

  // tau whose arms do not meet
  PathPtr bad_tau = raw::tau(b, mk_rho(parse_term("w")));
  CHECK_FALSE(well_formed(bad_tau));

  // sigma with forged caches
  auto forged = std::make_shared<Path>(*mk_sigma(b));
  forged->src = parse_term("w");
  CHECK_FALSE(well_formed(PathPtr(forged)));
}

TEST_CASE("path_of_conversion left-associates and wraps reversed legs") {
  TermPtr m = parse_term("(\\x.(\\y.y x) (\\w.z w)) v");
  auto steps = conversion_search(m, parse_term("z v"), 32);
  REQUIRE(steps.has_value());
  PathPtr p = path_of_conversion(m, *steps);
  REQUIRE(p->kind == PathKind::Tau);
  CHECK(p->a->kind == PathKind::Tau);  // τ(τ(first,second),third)
  CHECK(p->b->kind == PathKind::Atomic);
  CHECK(alpha_eq(p->src, m));
  CHECK(alpha_eq(p->dst, parse_term("z v")));
  CHECK(well_formed(p));

  // a zig-zag conversion puts its reversed legs under sigma
  TermPtr a = parse_term("(\\x.x) u");
  TermPtr b = parse_term("(\\y.u) w");
  auto zig = conversion_search(a, b, 16);
  REQUIRE(zig.has_value());
  PathPtr q = path_of_conversion(a, *zig);
  CHECK(alpha_eq(q->dst, b));
  bool found_sigma = false;
  for (PathPtr cur = q; cur; cur = cur->b)
    if ((cur->a && cur->a->kind == PathKind::Sigma) || cur->kind == PathKind::Sigma)
      found_sigma = true;
  CHECK(found_sigma);

  CHECK(path_of_conversion(m, {})->kind == PathKind::Rho);
}

TEST_CASE("broken conversion chains are rejected") {
  std::vector<ConvStep> steps;
  steps.push_back({parse_term("(\\x.x) u"), {}, StepKind::Beta, false});
  steps.push_back({parse_term("(\\x.x) w"), {}, StepKind::Beta, false});  // does not chain
  CHECK_THROWS_AS(path_of_conversion(parse_term("(\\x.x) u"), steps), BrokenChain);
}

TEST_CASE("compact printing round trips") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    TermPtr base = gen_term(rng, 4);
    PathPtr p = gen_path_from(rng, base, 4);
    PathPtr back = parse_path(print_path(p, PathStyle::Compact));
    REQUIRE(path_eq(p, back));
  }
}

TEST_CASE("greek style prints whole-term endpoints") {
  TermPtr m = parse_term("(\\x.(\\y.y x) (\\w.z w)) v");
  auto steps = conversion_search(m, parse_term("z v"), 32);
  REQUIRE(steps.has_value());
  PathPtr p = path_of_conversion(m, *steps);
  CHECK(print_path(p, PathStyle::Greek) ==
        "τ(τ(η((λx.(λy.y x) (λw.z w)) v,(λx.(λy.y x) z) v),"
        "β((λx.(λy.y x) z) v,(λy.y v) z)),β((λy.y v) z,z v))");
}

TEST_CASE("annotated style shows the congruence wrapper chain") {
  // the η step happens at position fn.body.arg → ν(ξ(μ(η(...))))
  TermPtr m = parse_term("(\\x.(\\y.y x) (\\w.z w)) v");
  PathPtr at = mk_atomic(m, position_from_string("fn.body.arg"), StepKind::Eta);
  std::string s = print_path(at, PathStyle::Annotated);
  CHECK(s.substr(0, std::string("ν(ξ(μ(η(").size()) == "ν(ξ(μ(η(");
  CHECK(s.back() == ')');
  // root steps carry no wrapper
  CHECK(print_path(beta_root("(\\x.x) u"), PathStyle::Annotated).rfind("β(", 0) == 0);
}

TEST_CASE("path parser reports errors with semantics intact") {
  CHECK_THROWS_AS(parse_path("rho(x"), ParseError);
  CHECK_THROWS_AS(parse_path("frob(x)"), ParseError);
  CHECK_THROWS_AS(parse_path("beta@(u v)"), NotARedex);                       // not a redex
  CHECK_THROWS_AS(parse_path("tau(rho(u),rho(v))"), EndpointMismatch);        // arms do not meet
  CHECK_THROWS_AS(parse_path("rho(u) rho(v)"), ParseError);                   // trailing input
}

TEST_CASE("path size and skeleton") {
  PathPtr b = beta_root("(\\x.x) u");
  PathPtr p = mk_tau(mk_sigma(mk_sigma(b)), mk_rho(b->dst));
  CHECK(path_size(p) == 5);
  CHECK(path_skeleton(p) == path_skeleton(parse_path(print_path(p, PathStyle::Compact))));
  CHECK(path_skeleton(b) != path_skeleton(mk_sigma(b)));
}
