#include "doctest.h"
#include "support.hpp"

using namespace hdts;

TEST_CASE("composition instance with n = 3, p = q = 1") {
  // states a, n1, n2, b; actions 0,1,2.
  std::vector<Transition> ts = {{0, {0, 1, 2}, 3}, {0, {0}, 1}, {1, {1, 2}, 3},
                                {0, {0, 1}, 2},    {2, {2}, 3}};
  auto s = saturate_transitions(ts);
  CHECK(std::find(s.begin(), s.end(), Transition{1, {1}, 2}) != s.end());
}

TEST_CASE("saturation agrees with the naive fixpoint") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> st(0, 4), ac(0, 2), len(1, 3), cnt(3, 9);
  for (int round = 0; round < 150; ++round) {
    std::vector<Transition> ts;
    for (int k = cnt(rng); k > 0; --k) {
      Transition t{st(rng), {}, st(rng)};
      for (int l = len(rng); l > 0; --l) t.word.push_back(ac(rng));
      ts.push_back(t);
    }
    auto fast = saturate_transitions(ts);
    auto slow = oracle::saturate_brute(ts);
    CHECK(std::set<Transition>(fast.begin(), fast.end()) == slow);
  }
}

TEST_CASE("saturation is idempotent and yields a weak system") {
  for (const auto& x : fixtures::random_corpus(9, 20)) {
    Tsys s = saturate(x);
    CHECK(saturate(s) == s);
    CHECK(is_weak(s));
  }
}

TEST_CASE("pure transition saturates to itself but the cube is free on it") {
  Tsys p = pure_transition({"x", "y", "z"});
  CHECK(saturate(p).num_transitions() == 6);
  // Composition creates the inner 1-transitions only with the 2-faces.
  CHECK_FALSE(is_cubical(p));
}

TEST_CASE("final lift of the two cube legs of wbar2") {
  Tsys w = wbar2("x");
  CHECK(w.num_states() == 6);
  CHECK(w.num_actions() == 3);
  CHECK(is_cubical(w));
}

TEST_CASE("final lift rejects malformed cones") {
  SetProfile prof{{"a"}, {{"u", "x"}}};
  ConeLeg bad{cube({"x"}), {"a", "missing"}, {"u"}};
  CHECK_THROWS_AS(final_lift(prof, {bad}), MalformedCone);
  ConeLeg wrong_label{cube({"y"}), {"a", "a"}, {"u"}};
  CHECK_THROWS_AS(final_lift(prof, {wrong_label}), MalformedCone);
}

TEST_CASE("quotient names classes by least member") {
  Tsys c = coproduct({cube({"x"}), cube({"x"})}).object;
  DisjointSets st(c.num_states()), ac(c.num_actions());
  st.unite(c.state("0.1"), c.state("1.0"));
  Quotient q = quotient(c, st, ac);
  CHECK(q.object.num_states() == 3);
  CHECK(q.object.find_state("0.1"));
  CHECK_FALSE(q.object.find_state("1.0"));
  CHECK(q.map.domain() == c);
}

TEST_CASE("image factorization") {
  TsMap p = generator("p", {"x"});
  ImageFactorization im = image_factor(p);
  CHECK(compose(im.inclusion, im.onto) == p);
  CHECK(surjective_on_states(im.onto));
  CHECK(surjective_on_actions(im.onto));
  CHECK(injective_on_states(im.inclusion));
  CHECK(injective_on_actions(im.inclusion));
}

TEST_CASE("union find") {
  DisjointSets d(5);
  CHECK(d.unite(0, 1));
  CHECK_FALSE(d.unite(1, 0));
  CHECK(d.unite(3, 4));
  CHECK(d.same(0, 1));
  CHECK_FALSE(d.same(1, 3));
}
