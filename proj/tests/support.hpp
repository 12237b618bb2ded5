// Shared fixtures for the test binaries: brute-force oracles, a fixed
// corpus and a seeded random generator of cubical systems.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hdts/axioms.hpp"
#include "hdts/builders.hpp"
#include "hdts/cats.hpp"
#include "hdts/closure.hpp"
#include "hdts/core.hpp"
#include "hdts/homotopy.hpp"
#include "hdts/reflect.hpp"
#include "hdts/search.hpp"
#include "hdts/union_find.hpp"

namespace oracle {

using hdts::Transition;
using hdts::Tsys;

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Counts d-words over n actions between n-bit states that pass the
// cube-membership predicate: distinct indices, all 0 in the source, and
// the target is the source with those bits set.
inline std::uint64_t cube_transitions_brute(int n, int d) {
  std::uint64_t count = 0;
  const unsigned states = 1u << n;
  std::vector<int> word(d, 0);
  for (unsigned from = 0; from < states; ++from)
    for (unsigned to = 0; to < states; ++to) {
      std::fill(word.begin(), word.end(), 0);
      while (true) {
        unsigned mask = 0;
        bool ok = true;
        for (int a : word) {
          if (mask & (1u << a) || from & (1u << a)) ok = false;
          mask |= 1u << a;
        }
        if (ok && (from | mask) == to) ++count;
        int i = 0;
        while (i < d && ++word[i] == n) word[i++] = 0;
        if (i == d) break;
      }
    }
  return count;
}

// Least set containing `ts` closed under permutation and the composition
// rule, by naive rescanning until nothing changes.
inline std::set<Transition> saturate_brute(const std::vector<Transition>& ts) {
  std::set<Transition> s(ts.begin(), ts.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Transition> add;
    for (const auto& t : s) {
      std::vector<int> w = t.word;
      std::sort(w.begin(), w.end());
      do {
        Transition p{t.source, w, t.target};
        if (!s.count(p)) add.push_back(p);
      } while (std::next_permutation(w.begin(), w.end()));
    }
    for (const auto& t : s) {
      const int n = static_cast<int>(t.word.size());
      for (int p = 1; p < n; ++p)
        for (int q = 1; p + q < n; ++q)
          for (const auto& a : s) {
            if (a.source != t.source || a.word.size() != std::size_t(p) ||
                !std::equal(a.word.begin(), a.word.end(), t.word.begin()))
              continue;
            const int nu1 = a.target;
            Transition rest1{nu1, {t.word.begin() + p, t.word.end()}, t.target};
            if (!s.count(rest1)) continue;
            for (const auto& b : s) {
              if (b.source != t.source || b.word.size() != std::size_t(p + q) ||
                  !std::equal(b.word.begin(), b.word.end(), t.word.begin()))
                continue;
              const int nu2 = b.target;
              Transition rest2{nu2, {t.word.begin() + p + q, t.word.end()},
                               t.target};
              if (!s.count(rest2)) continue;
              Transition c{nu1, {t.word.begin() + p, t.word.begin() + p + q}, nu2};
              if (!s.count(c)) add.push_back(c);
            }
          }
    }
    for (auto& t : add)
      if (s.insert(t).second) changed = true;
  }
  return s;
}

// Number of maps a -> x by trying every label-preserving pair of
// functions.
inline std::uint64_t hom_count_brute(const Tsys& a, const Tsys& x) {
  const std::size_t ns = a.num_states(), na = a.num_actions();
  std::vector<std::vector<int>> act_choices(na);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < x.num_actions(); ++j)
      if (a.label(int(i)) == x.label(int(j))) act_choices[i].push_back(int(j));
  if (ns > 0 && x.num_states() == 0) return 0;
  for (const auto& c : act_choices)
    if (c.empty()) return 0;
  std::uint64_t count = 0;
  std::vector<int> s(ns, 0), ai(na, 0);
  while (true) {
    std::vector<int> am(na);
    for (std::size_t i = 0; i < na; ++i) am[i] = act_choices[i][ai[i]];
    // Each state assignment for this action assignment.
    std::fill(s.begin(), s.end(), 0);
    while (true) {
      bool ok = true;
      for (const auto& t : a.transitions()) {
        Transition img{s[t.source], {}, s[t.target]};
        for (int u : t.word) img.word.push_back(am[u]);
        if (!x.contains(img)) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
      std::size_t i = 0;
      while (i < ns && ++s[i] == int(x.num_states())) s[i++] = 0;
      if (i == ns) break;
    }
    std::size_t i = 0;
    while (i < na && ++ai[i] == int(act_choices[i].size())) ai[i++] = 0;
    if (i == na) break;
  }
  return count;
}

// Isomorphism by trying every bijection; for small systems only.
inline bool iso_brute(const Tsys& x, const Tsys& y) {
  if (x.num_states() != y.num_states() || x.num_actions() != y.num_actions() ||
      x.num_transitions() != y.num_transitions())
    return false;
  std::vector<int> s(x.num_states()), a(x.num_actions());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = int(i);
  do {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = int(i);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i)
        ok = x.label(int(i)) == y.label(a[i]);
      for (const auto& t : x.transitions()) {
        if (!ok) break;
        Transition img{s[t.source], {}, s[t.target]};
        for (int u : t.word) img.word.push_back(a[u]);
        ok = y.contains(img);
      }
      if (ok) return true;
    } while (std::next_permutation(a.begin(), a.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

// Number of states after merging, to a fixpoint, every pair of
// intermediate states that split the same transition at the same position,
// re-closing the transitions after each round.
inline std::size_t csa2_state_count_brute(const Tsys& x) {
  const int n = int(x.num_states());
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i;
  std::set<Transition> ts(x.transitions().begin(), x.transitions().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : ts) {
      for (std::size_t p = 1; p < t.word.size(); ++p) {
        std::vector<int> mids;
        for (const auto& a : ts)
          if (a.source == t.source && a.word.size() == p &&
              std::equal(a.word.begin(), a.word.end(), t.word.begin()) &&
              ts.count(Transition{a.target, {t.word.begin() + p, t.word.end()},
                                  t.target}))
            mids.push_back(a.target);
        for (std::size_t k = 1; k < mids.size(); ++k)
          if (mids[k] != mids[0]) {
            int from = mids[k], to = mids[0];
            for (int& c : cls)
              if (c == from) c = to;
            changed = true;
          }
        if (changed) break;
      }
      if (changed) break;
    }
    if (changed) {
      std::vector<Transition> next;
      for (const auto& t : ts) next.push_back({cls[t.source], t.word, cls[t.target]});
      ts = saturate_brute(next);
    }
  }
  return std::set<int>(cls.begin(), cls.end()).size();
}

}  // namespace oracle

namespace fixtures {

using hdts::Tsys;
using hdts::TsMap;

struct Named {
  std::string name;
  Tsys x;
};

// Random quotient of a coproduct of small cubes, saturated. Stays within
// the cubical systems since every merge is a colimit of cubes. Cubes with
// the same labels are sometimes glued along their extreme corners and
// actions, which breaks unique intermediate states.
inline Tsys random_cubical(std::mt19937& rng, int max_parts = 3, int max_dim = 2) {
  std::uniform_int_distribution<int> parts(1, max_parts), dim(0, max_dim),
      lab(0, 1), coin(0, 1);
  std::vector<std::vector<std::string>> shapes;
  std::vector<Tsys> cubes;
  const int k = parts(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> labels;
    for (int d = dim(rng); d > 0; --d) labels.push_back(lab(rng) ? "a" : "b");
    // Repeat the previous shape half the time.
    if (i > 0 && coin(rng)) labels = shapes.back();
    shapes.push_back(labels);
    cubes.push_back(hdts::cube(labels));
  }
  Tsys x = hdts::coproduct(cubes).object;
  hdts::DisjointSets st(x.num_states()), ac(x.num_actions());
  auto pre = [](int i) { return std::to_string(i) + "."; };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::size_t n = shapes[i].size();
      if (shapes[i] != shapes[j] || n < 2 || !coin(rng)) continue;
      for (const std::string& corner : {std::string(n, '0'), std::string(n, '1')})
        st.unite(x.state(pre(i) + corner), x.state(pre(j) + corner));
      for (std::size_t a = 0; a < n; ++a) {
        const std::string name = hdts::cube_action_name(shapes[i][a], a + 1);
        ac.unite(x.action(pre(i) + name), x.action(pre(j) + name));
      }
    }
  std::uniform_int_distribution<int> merges(0, 3);
  if (x.num_states() > 1) {
    std::uniform_int_distribution<int> pick(0, int(x.num_states()) - 1);
    for (int m = merges(rng); m > 0; --m) st.unite(pick(rng), pick(rng));
  }
  if (x.num_actions() > 1) {
    std::uniform_int_distribution<int> pick(0, int(x.num_actions()) - 1);
    for (int m = merges(rng) / 2; m > 0; --m) {
      int u = pick(rng), v = pick(rng);
      if (x.label(u) == x.label(v)) ac.unite(u, v);
    }
  }
  return hdts::quotient(x, st, ac).object;
}

inline std::vector<Tsys> random_corpus(std::uint32_t seed, int count,
                                       int max_parts = 3, int max_dim = 2) {
  std::mt19937 rng(seed);
  std::vector<Tsys> out;
  for (int i = 0; i < count; ++i) out.push_back(random_cubical(rng, max_parts, max_dim));
  return out;
}

// Named systems covering every builder and worked example.
inline std::vector<Named> fixed_corpus() {
  using hdts::cube;
  std::vector<Named> c = {
      {"C0", cube({})},
      {"C1x", cube({"x"})},
      {"C2xy", cube({"x", "y"})},
      {"C2xx", cube({"x", "x"})},
      {"C3xyz", cube({"x", "y", "z"})},
      {"C3xxy", cube({"x", "x", "y"})},
      {"pure2", hdts::pure_transition({"x", "y"})},
      {"boundary2", hdts::boundary({"x", "y"})},
      {"double", hdts::double_transition("x")},
      {"zx", hdts::zx("x")},
      {"intro1", hdts::intro_example(1)},
      {"intro2", hdts::intro_example(2)},
      {"intro3", hdts::intro_example(3)},
      {"csa1diff", hdts::csa1diff()},
      {"wbar2", hdts::wbar2("x")},
      {"wbar3", hdts::wbar3("x")},
      {"cylC1", hdts::cyl(cube({"x"})).object},
      {"C1+C1", hdts::coproduct({cube({"x"}), cube({"x"})}).object},
  };
  auto rnd = random_corpus(7, 14);
  for (std::size_t i = 0; i < rnd.size(); ++i)
    c.push_back({"random" + std::to_string(i), rnd[i]});
  return c;
}

// Generators and example maps, plus units and counits of the corpus.
inline std::vector<std::pair<std::string, TsMap>> map_corpus() {
  std::vector<std::pair<std::string, TsMap>> maps;
  for (const auto& g : hdts::generator_names()) {
    if (g == "eta" || g == "boundary_incl") {
      maps.emplace_back(g + "[x]", hdts::generator(g, {"x"}));
      maps.emplace_back(g + "[x,y]", hdts::generator(g, {"x", "y"}));
    } else if (g == "pure_incl") {
      maps.emplace_back(g + "[x,y]", hdts::generator(g, {"x", "y"}));
    } else {
      maps.emplace_back(g + "[x]", hdts::generator(g, {"x"}));
    }
  }
  maps.emplace_back("wbar2_map", hdts::wbar2_map("x"));
  maps.emplace_back("wbar3_attach", hdts::wbar3_attach("x"));
  for (const auto& [name, x] : fixed_corpus()) {
    if (!hdts::is_cubical(x)) continue;
    maps.emplace_back("csa2_unit:" + name, hdts::csa2_reflect(x).unit);
    maps.emplace_back("ls_cts_unit:" + name, hdts::ls_reflect_cts(x).unit);
    if (hdts::is_regular(x)) {
      maps.emplace_back("ls_rts_unit:" + name, hdts::ls_reflect_rts(x).unit);
      maps.emplace_back("csa1_rts_unit:" + name, hdts::csa1_reflect_rts(x).unit);
      maps.emplace_back("cub_counit:" + name, hdts::cubification(x).counit);
    }
  }
  return maps;
}

}  // namespace fixtures
