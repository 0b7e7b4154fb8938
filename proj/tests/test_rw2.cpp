#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pathrw/corpus.hpp"
#include "pathrw/rw2.hpp"

using namespace pathrw;

namespace {

PathPtr beta_root(const std::string& text) {
  return mk_atomic(parse_term(text), {}, StepKind::Beta);
}

bool sequences_identical(const RwSequence& a, const RwSequence& b) {
  if (!path_eq(a.start, b.start) || a.steps.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    if (a.steps[i].rule != b.steps[i].rule || a.steps[i].at != b.steps[i].at ||
        a.steps[i].reversed != b.steps[i].reversed ||
        !path_eq(a.steps[i].before, b.steps[i].before) ||
        !path_eq(a.steps[i].after, b.steps[i].after))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonicalize is idempotent and endpoint preserving") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    TermPtr base = gen_term(rng, 4);
    PathPtr p = gen_path_from(rng, base, 5);
    TwoCell cell = loop_cell(p, rng);
    RwSequence once = canonicalize(cell.underlying);
    RwSequence twice = canonicalize(once);
    REQUIRE(sequences_identical(once, twice));
    REQUIRE(path_eq(once.start, cell.underlying.start));
    REQUIRE(path_eq(once.end(), cell.underlying.end()));
  }
}

TEST_CASE("a sequence composed with its inverse cancels to nothing") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    TermPtr base = gen_term(rng, 4);
    PathPtr p = gen_path_from(rng, base, 5);
    auto [nf, trace] = rw_normalize(p, Strategy::lo());
    (void)nf;
    TwoCell cell = make_cell(trace);
    TwoCell round_trip = seq_compose(cell, seq_inverse(cell));
    REQUIRE(round_trip.canonical.steps.empty());
    REQUIRE(rw2_equal(round_trip, seq_refl(p)));
  }
}

TEST_CASE("choice independence: disjoint steps reorder canonically") {
  PathPtr b1 = beta_root("(\\x.x) u");       // (\x.x) u → u
  PathPtr b2 = beta_root("(\\y.y) u");       // (\y.y) u → u
  PathPtr left = mk_sigma(mk_sigma(b1));     // (\x.x) u → u
  PathPtr right = mk_sigma(mk_sigma(mk_sigma(b2)));  // u → (\y.y) u
  PathPtr p = mk_tau(left, right);

  PathPosition first{PathTag::First};
  PathPosition second{PathTag::Second};

  RwSequence theta;  // first arm, then second arm
  theta.start = p;
  PathPtr mid1 = rw_contract(p, RwRule::SS, first);
  theta.steps.push_back({p, mid1, RwRule::SS, first, false});
  PathPtr end1 = rw_contract(mid1, RwRule::SS, second);
  theta.steps.push_back({mid1, end1, RwRule::SS, second, false});

  RwSequence theta_prime;  // the other order
  theta_prime.start = p;
  PathPtr mid2 = rw_contract(p, RwRule::SS, second);
  theta_prime.steps.push_back({p, mid2, RwRule::SS, second, false});
  PathPtr end2 = rw_contract(mid2, RwRule::SS, first);
  theta_prime.steps.push_back({mid2, end2, RwRule::SS, first, false});

  REQUIRE(path_eq(end1, end2));
  CHECK(rw2_equal(make_cell(theta), make_cell(theta_prime)));
}

TEST_CASE("nested prefixes are not reordered") {
  PathPtr b = beta_root("(\\x.x) u");
  PathPtr p = mk_sigma(mk_sigma(mk_sigma(mk_sigma(b))));  // σ⁴(b)
  // two nested ss steps: root then root again — prefix positions, order fixed
  RwSequence seq;
  seq.start = p;
  PathPtr q1 = rw_contract(p, RwRule::SS, {});
  seq.steps.push_back({p, q1, RwRule::SS, {}, false});
  PathPtr q2 = rw_contract(q1, RwRule::SS, {});
  seq.steps.push_back({q1, q2, RwRule::SS, {}, false});
  RwSequence canon = canonicalize(seq);
  REQUIRE(canon.steps.size() == 2);
  CHECK(canon.steps[0].at.empty());
  CHECK(canon.steps[1].at.empty());
}

TEST_CASE("vertical composition validates endpoints") {
  PathPtr b = beta_root("(\\x.x) u");
  PathPtr p = mk_tau(b, mk_rho(b->dst));
  auto [nf, trace] = rw_normalize(p, Strategy::lo());
  (void)nf;
  TwoCell cell = make_cell(trace);
  CHECK_THROWS_AS(seq_compose(cell, cell), EndpointMismatch);
  TwoCell ok = seq_compose(seq_refl(p), cell);
  CHECK(rw2_equal(ok, cell));
}

TEST_CASE("horizontal composition whiskers into the two tau arms") {
  PathPtr b1 = beta_root("(\\x.x) u");
  // alpha: τ(b1,ρ_u) ⇒ b1 over src(b1)→u
  PathPtr left = mk_tau(b1, mk_rho(b1->dst));
  auto [lnf, ltrace] = rw_normalize(left, Strategy::lo());
  TwoCell alpha = make_cell(ltrace);
  REQUIRE(path_eq(lnf, b1));

  // theta: a loop at u, so the endpoints of the two cells meet
  PathPtr rho_u = mk_rho(b1->dst);
  PathPtr right = mk_tau(mk_sigma(mk_sigma(rho_u)), rho_u);
  auto [rnf, rtrace] = rw_normalize(right, Strategy::lo());
  (void)rnf;
  TwoCell theta = make_cell(rtrace);

  TwoCell composite = horizontal_compose(alpha, theta);
  REQUIRE(path_eq(composite.source, mk_tau(left, right)));
  REQUIRE(path_eq(composite.target, mk_tau(alpha.target, theta.target)));
  REQUIRE(replay(composite.underlying));
  // alpha's steps run under First, theta's under Second
  std::size_t i = 0;
  for (; i < alpha.underlying.steps.size(); ++i)
    CHECK(composite.underlying.steps[i].at.front() == PathTag::First);
  for (; i < composite.underlying.steps.size(); ++i)
    CHECK(composite.underlying.steps[i].at.front() == PathTag::Second);
}

TEST_CASE("disjointness predicate") {
  PathPosition root{};
  PathPosition first{PathTag::First};
  PathPosition second{PathTag::Second};
  PathPosition first_inner{PathTag::First, PathTag::Inner};
  CHECK(disjoint_positions(first, second));
  CHECK_FALSE(disjoint_positions(root, first));
  CHECK_FALSE(disjoint_positions(first, first_inner));
  CHECK(disjoint_positions(first_inner, second));
  CHECK_FALSE(disjoint_positions(first, first));
}

TEST_CASE("seq_inverse reverses and flips") {
  PathPtr b = beta_root("(\\x.x) u");
  PathPtr p = mk_sigma(mk_sigma(b));
  auto [nf, trace] = rw_normalize(p, Strategy::lo());
  TwoCell cell = make_cell(trace);
  TwoCell inv = seq_inverse(cell);
  CHECK(path_eq(inv.source, nf));
  CHECK(path_eq(inv.target, p));
  REQUIRE(inv.underlying.steps.size() == cell.underlying.steps.size());
  for (std::size_t i = 0; i < inv.underlying.steps.size(); ++i) {
    const RwStep& fwd = cell.underlying.steps[cell.underlying.steps.size() - 1 - i];
    const RwStep& rev = inv.underlying.steps[i];
    CHECK(rev.rule == fwd.rule);
    CHECK(rev.reversed != fwd.reversed);
    CHECK(path_eq(rev.before, fwd.after));
    CHECK(path_eq(rev.after, fwd.before));
  }
  CHECK(replay(inv.underlying));
}
