#include "doctest.h"
#include "support.hpp"

using namespace hdts;

namespace {

// Targets for the universal-property checks.
std::vector<Tsys> targets() {
  return {cube({"x"}), cube({"x", "x"}), cube({"x", "y"}), double_transition("x"),
          zx("x"), wbar2("x")};
}

}  // namespace

TEST_CASE("pair names stay injective") {
  auto n = pair_names({{"a", "b"}, {"c", "d"}});
  CHECK(n == std::vector<std::string>{"a:b", "c:d"});
  auto m = pair_names({{"a:b", "c"}, {"a", "b:c"}});
  CHECK(m[0] != m[1]);
}

TEST_CASE("coproduct represents pairs of maps") {
  Coproduct cp = coproduct({cube({"x"}), double_transition("x")});
  CHECK(cp.object.find_state("0.1"));
  CHECK(cp.object.find_action("1.x"));
  for (const auto& t : targets())
    CHECK(hom_count(cp.object, t) ==
          hom_count(cube({"x"}), t) * hom_count(double_transition("x"), t));
}

TEST_CASE("product represents pairs of maps") {
  std::vector<Tsys> xs = {cube({"x"}), cube({"x", "y"}), double_transition("x"),
                          zx("x")};
  std::vector<Tsys> probes = {cube({}), cube({"x"}), cube({"x", "x"}),
                              cube({"x", "y"})};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      Product p = product(a, b);
      CHECK(is_cubical(p.object));
      for (const auto& z : probes)
        CHECK(hom_count(z, p.object) == hom_count(z, a) * hom_count(z, b));
    }
  CHECK_THROWS_AS(product(pure_transition({"x", "y"}), cube({"x"})),
                  PreconditionFailed);
}

TEST_CASE("products of regular systems stay regular on the random corpus") {
  auto rnd = fixtures::random_corpus(21, 16, 2, 2);
  int checked = 0;
  for (std::size_t i = 0; i + 1 < rnd.size(); ++i) {
    if (!is_regular(rnd[i]) || !is_regular(rnd[i + 1])) continue;
    CHECK(is_regular(product(rnd[i], rnd[i + 1]).object));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("pushout represents compatible pairs") {
  std::vector<std::pair<TsMap, TsMap>> spans = {
      {generator("p", {"x"}), wbar3_attach("x")},
      {generator("c0", {"x"}), generator("c1", {"x"})},
      {generator("gamma0", {"x"}), generator("gamma1", {"x"})},
  };
  for (const auto& [f, g] : spans) {
    Pushout po = pushout(f, g, PushoutMode::Cts);
    CHECK(compose(po.leg_b, f) == compose(po.leg_c, g));
    for (const auto& t : targets()) {
      std::uint64_t pairs = 0;
      for (const auto& b : hom_search(f.codomain(), t))
        for (const auto& c : hom_search(g.codomain(), t))
          if (compose(b, f) == compose(c, g)) ++pairs;
      CHECK(hom_count(po.object, t) == pairs);
    }
  }
}

TEST_CASE("rts pushout is the regular reflection of the cts pushout") {
  Pushout a = wbar3_pushout("x", PushoutMode::Cts);
  Pushout b = wbar3_pushout("x", PushoutMode::Rts);
  CHECK(is_regular(b.object));
  CHECK(is_isomorphic(b.object, csa2_reflect(a.object).object));
}

TEST_CASE("cubification is bijective on states and keeps cube maps") {
  for (const auto& [name, x] : fixtures::fixed_corpus()) {
    CAPTURE(name);
    Coreflection c = cubification(x);
    CHECK(injective_on_states(c.counit));
    CHECK(surjective_on_states(c.counit));
    CHECK(is_cubical(c.object));
    for (const auto& shape : {cube({"x"}), cube({"x", "y"})})
      CHECK(hom_count(shape, c.object) == hom_count(shape, x));
  }
}

TEST_CASE("cubification fixes cubes and drops unfilled shapes") {
  for (const auto& c : {cube({}), cube({"x"}), cube({"x", "y"}), cube({"x", "x"})})
    CHECK(is_iso_map(cubification(c).counit));
  Coreflection p = cubification(pure_transition({"x", "y"}));
  CHECK(p.object.num_states() == 2);
  CHECK(p.object.num_actions() == 0);
  // The boundary of a square is not glued from squares.
  Coreflection b = cubification(boundary({"x", "y"}));
  CHECK(b.object.num_states() == 4);
  CHECK(b.object.num_transitions() == 4);
}

TEST_CASE("cubical coreflection fixes cubical systems") {
  for (const auto& x : {cube({"x", "y"}), zx("x"), double_transition("x"),
                        intro_example(2)}) {
    Coreflection c = cts_coreflection(x);
    CHECK(is_iso_map(c.counit));
  }
}

TEST_CASE("intermediate saturation of a bare action keeps the action") {
  Coreflection c = intermediate_saturation(bare_action("x"));
  CHECK(c.object.num_actions() == 1);
  CHECK(is_iso_map(c.counit));
}
