#include "doctest.h"
#include "support.hpp"

using namespace hdts;

TEST_CASE("hom counts agree with exhaustive enumeration") {
  std::vector<Tsys> small = {cube({}), cube({"x"}), cube({"x", "x"}),
                             cube({"x", "y"}), double_transition("x"), zx("x"),
                             intro_example(1), wbar2("x")};
  for (const auto& a : small)
    for (const auto& y : small) {
      if (a.num_states() > 4 || y.num_states() > 6) continue;
      CHECK(hom_count(a, y) == oracle::hom_count_brute(a, y));
    }
}

TEST_CASE("hom counts on random pairs agree with exhaustive enumeration") {
  auto rnd = fixtures::random_corpus(11, 24, 2, 2);
  for (std::size_t i = 0; i + 1 < rnd.size(); i += 2) {
    const Tsys& a = rnd[i];
    const Tsys& y = rnd[i + 1];
    if (a.num_states() > 4 || y.num_states() > 6) continue;
    CHECK(hom_count(a, y) == oracle::hom_count_brute(a, y));
  }
}

TEST_CASE("hom_search is sorted and every result is a valid map") {
  auto maps = hom_search(cube({"x"}), cube({"x", "x"}));
  CHECK(maps.size() == 4);
  for (std::size_t i = 1; i < maps.size(); ++i) {
    auto key = [](const TsMap& f) {
      return std::make_pair(f.state_map(), f.action_map());
    };
    CHECK(key(maps[i - 1]) < key(maps[i]));
  }
}

TEST_CASE("injective option and candidates restrict the search") {
  HomSearchOptions opt;
  opt.injective = true;
  CHECK(hom_count(cube({"x", "x"}), cube({"x"}), opt) == 0);
  HomSearchOptions pin;
  pin.state_candidates = {std::vector<int>{0}, std::nullopt};
  CHECK(hom_count(cube({"x"}), cube({"x", "x"}), pin) == 2);
}

TEST_CASE("budget overrun throws") {
  HomSearchOptions opt;
  opt.budget = 3;
  CHECK_THROWS_AS(hom_count(cube({"x", "x", "x"}), cube({"x", "x", "x"}), opt),
                  SizeLimitExceeded);
}

TEST_CASE("iso_search agrees with brute force") {
  auto rnd = fixtures::random_corpus(5, 30, 2, 2);
  for (std::size_t i = 0; i + 1 < rnd.size(); ++i) {
    const Tsys& x = rnd[i];
    const Tsys& y = rnd[i + 1];
    if (x.num_states() > 6 || x.num_actions() > 4) continue;
    CHECK(is_isomorphic(x, y) == oracle::iso_brute(x, y));
    CHECK(is_isomorphic(x, x));
  }
  CHECK(is_isomorphic(cube({"x", "y"}), cube({"y", "x"})));
  CHECK_FALSE(is_isomorphic(cube({"x", "x"}), cube({"x", "y"})));
  auto f = iso_search(cube({"x", "y"}), cube({"y", "x"}));
  REQUIRE(f);
  CHECK(is_iso_map(*f));
}
