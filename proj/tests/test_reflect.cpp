#include "doctest.h"
#include "support.hpp"

using namespace hdts;

namespace {

std::set<std::string> described(const Tsys& x) {
  std::set<std::string> s;
  for (const auto& t : x.transitions()) s.insert(x.describe(t));
  return s;
}

}  // namespace

TEST_CASE("reflector names") {
  for (auto k : {ReflectorKind::Csa2, ReflectorKind::Csa1Cts, ReflectorKind::Csa1Rts,
                 ReflectorKind::LsCts, ReflectorKind::LsRts}) {
    CHECK(parse_reflector_kind(to_string(k)) == k);
  }
  CHECK(parse_reflector_kind("ls-rts") == ReflectorKind::LsRts);
  CHECK_THROWS_AS(parse_reflector_kind("nope"), std::invalid_argument);
}

TEST_CASE("csa2 on the intro example merges the b states") {
  for (int n = 1; n <= 4; ++n) {
    Reflection r = csa2_reflect(intro_example(n));
    CHECK(r.object.num_states() == 4);
    CHECK(r.object.num_states() == oracle::csa2_state_count_brute(intro_example(n)));
    CHECK(is_regular(r.object));
    CHECK(surjective_on_states(r.unit));
    CHECK(injective_on_actions(r.unit));
    CHECK(surjective_on_actions(r.unit));
  }
}

TEST_CASE("csa2 state counts agree with the merge oracle on the random corpus") {
  for (const auto& x : fixtures::random_corpus(13, 200, 4, 3)) {
    Reflection r = csa2_reflect(x);
    CHECK(r.object.num_states() == oracle::csa2_state_count_brute(x));
    CHECK(is_regular(r.object));
    CHECK(is_iso_map(csa2_reflect(r.object).unit));
  }
}

TEST_CASE("reflectors check their preconditions") {
  CHECK_THROWS_AS(csa2_reflect(pure_transition({"x", "y"})), PreconditionFailed);
  CHECK_THROWS_AS(ls_reflect_rts(intro_example(2)), PreconditionFailed);
  CHECK_THROWS_AS(csa1_reflect_rts(intro_example(2)), PreconditionFailed);
}

TEST_CASE("csa1 reflectors on zx") {
  Reflection r = csa1_reflect_cts(zx("x"));
  CHECK(r.object.num_actions() == 1);
  CHECK(satisfies_csa1(r.object));
  CHECK(r.trace.size() == 2);
}

TEST_CASE("csa1diff goldens") {
  Tsys x = csa1diff();
  Reflection a = csa1_reflect_cts(x);
  const std::set<std::string> cts = {
      "(alpha,u1,u2,beta)", "(alpha,u2,u1,beta)", "(alpha,u1,chi)",
      "(chi,u2,beta)",      "(alpha,u2,nu)",      "(nu,u1,beta)",
      "(alpha,u1,chi_p)",   "(chi_p,u2,beta)",    "(alpha,u2,nu_p)",
      "(nu_p,u1,beta)",     "(gamma,v,chi)",      "(gamma,v_p,chi_p)",
      "(U1,u1,V1)",         "(U2,u2,V2)"};
  CHECK(described(a.object) == cts);
  CHECK(a.object.num_states() == x.num_states());
  CHECK_FALSE(is_regular(a.object));

  Reflection b = csa2_reflect(a.object);
  const std::set<std::string> rts = {
      "(alpha,u1,u2,beta)", "(alpha,u2,u1,beta)", "(alpha,u1,chi)",
      "(chi,u2,beta)",      "(alpha,u2,nu)",      "(nu,u1,beta)",
      "(gamma,v,chi)",      "(gamma,v_p,chi)",    "(U1,u1,V1)",
      "(U2,u2,V2)"};
  CHECK(described(b.object) == rts);
  CHECK(b.object.num_transitions() == 10);

  Reflection c = csa1_reflect_rts(x);
  TsMap unit_ab = compose(b.unit, a.unit);
  TsMap cmp = factor_through(unit_ab, c.unit);
  CHECK_FALSE(is_iso_map(cmp));
  CHECK(cmp.action(b.object.action("v")) == cmp.action(b.object.action("v_p")));
  CHECK(c.object.num_actions() == 3);
}

TEST_CASE("ls reflectors on wbar2") {
  Reflection c = ls_reflect_cts(wbar2("x"));
  CHECK(c.object.num_actions() == 1);
  CHECK(c.object.num_states() == 6);
  Reflection r = ls_reflect_rts(wbar2("x"));
  CHECK(is_isomorphic(r.object, ls_reflect_rts(cube({"x", "x"})).object));
  CHECK(r.object.num_states() == 3);
  CHECK_FALSE(injective_on_states(r.unit));
}

TEST_CASE("units are universal among maps into reflected targets") {
  // Every map from X into a system already in the subcategory factors
  // through the unit exactly once.
  std::vector<Tsys> sources = {zx("x"), intro_example(2), cube({"x", "x"}),
                               double_transition("x")};
  std::vector<Tsys> targets = {cube({"x"}), cube({"x", "x"}), double_transition("x"),
                               csa2_reflect(intro_example(2)).object};
  for (const auto& x : sources) {
    Reflection r2 = csa2_reflect(x);
    Reflection r1 = csa1_reflect_cts(x);
    for (const auto& t : targets) {
      if (is_regular(t))
        CHECK(hom_count(x, t) == hom_count(r2.object, t));
      if (satisfies_csa1(t))
        CHECK(hom_count(x, t) == hom_count(r1.object, t));
    }
  }
}

TEST_CASE("induced maps commute with units") {
  TsMap f = wbar2_map("x");
  for (auto k : {ReflectorKind::Csa2, ReflectorKind::LsCts, ReflectorKind::LsRts,
                 ReflectorKind::Csa1Rts}) {
    TsMap g = induced_map(k, f);
    CHECK(compose(g, reflect(k, f.domain()).unit) ==
          compose(reflect(k, f.codomain()).unit, f));
  }
}

TEST_CASE("traces record merges") {
  Reflection r = csa2_reflect(intro_example(3));
  CHECK(r.trace.size() == 2);
  for (const auto& e : r.trace) CHECK(e.kind == MergeEvent::Kind::State);
}
