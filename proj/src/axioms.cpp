#include "hdts/axioms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "split_index.hpp"

namespace hdts {

namespace {

using detail::SplitIndex;

template <class W>
void fail(AxiomCheck<W>& c, std::size_t cap, W w, std::size_t count = 1) {
  c.pass = false;
  c.violations += count;
  if (c.witnesses.size() < cap) c.witnesses.push_back(std::move(w));
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_multiset(const Tsys& x, std::size_t cap,
                    AxiomCheck<MissingTransition>& out) {
  std::map<Transition, std::vector<const Transition*>> groups;
  for (const auto& t : x.transitions()) {
    Transition k = t;
    std::sort(k.word.begin(), k.word.end());
    groups[k].push_back(&t);
  }
  for (const auto& [key, members] : groups) {
    std::size_t expected = factorial(key.word.size());
    for (std::size_t i = 0; i < key.word.size();) {
      std::size_t j = i;
      while (j < key.word.size() && key.word[j] == key.word[i]) ++j;
      expected /= factorial(j - i);
      i = j;
    }
    if (members.size() == expected) continue;
    std::vector<int> w = key.word;
    std::size_t missing_total = expected - members.size();
    bool first = true;
    do {
      Transition cand{key.source, w, key.target};
      if (!x.contains(cand)) {
        fail(out, cap, MissingTransition{*members.front(), cand},
             first ? missing_total : 0);
        first = false;
        if (out.witnesses.size() >= cap) break;
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

void check_splits(const Tsys& x, const SplitIndex& idx, std::size_t cap,
                  AxiomReport& r) {
  for (const auto& t : x.transitions()) {
    const std::size_t n = t.word.size();
    for (std::size_t p = 1; p < n; ++p) {
      auto s = idx.splits(t, p);
      if (s.empty()) {
        fail(r.intermediate_state, cap, SplitFailure{t, p, s});
        fail(r.unique_intermediate_state, cap, SplitFailure{t, p, s});
      } else if (s.size() > 1) {
        fail(r.unique_intermediate_state, cap, SplitFailure{t, p, s});
      }
    }
    for (std::size_t p = 1; p + 1 < n; ++p) {
      auto first = idx.splits(t, p);
      if (first.empty()) continue;
      for (std::size_t q = 1; p + q < n; ++q) {
        auto second = idx.splits(t, p + q);
        for (int nu1 : first)
          for (int nu2 : second) {
            Transition c{nu1,
                         std::vector<int>(t.word.begin() + p,
                                          t.word.begin() + p + q),
                         nu2};
            if (!x.contains(c))
              fail(r.composition, cap,
                   CompositionFailure{t, p, q, nu1, nu2, c});
          }
      }
    }
  }
}

std::string word_text(const Tsys& x, const std::vector<int>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ",";
    out += x.state_name(states[i]);
  }
  return out;
}

}  // namespace

AxiomCheck<MissingTransition> check_fibrancy(const Tsys& x,
                                             std::size_t witness_cap) {
  AxiomCheck<MissingTransition> out;
  std::map<std::string, std::vector<int>> by_label;
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    by_label[x.label(static_cast<int>(a))].push_back(static_cast<int>(a));
  // Group by endpoints and ordered label word; a fibrant group is the full
  // product of the label classes.
  std::map<std::tuple<int, int, std::vector<std::string>>,
           std::vector<const Transition*>>
      groups;
  for (const auto& t : x.transitions()) {
    std::vector<std::string> lw;
    for (int a : t.word) lw.push_back(x.label(a));
    groups[{t.source, t.target, lw}].push_back(&t);
  }
  for (const auto& [key, members] : groups) {
    const auto& lw = std::get<2>(key);
    std::size_t expected = 1;
    std::vector<const std::vector<int>*> classes;
    for (const auto& l : lw) {
      classes.push_back(&by_label[l]);
      expected *= classes.back()->size();
    }
    if (members.size() == expected) continue;
    std::size_t missing_total = expected - members.size();
    bool first = true;
    std::vector<std::size_t> pos(lw.size(), 0);
    while (true) {
      Transition cand{std::get<0>(key), {}, std::get<1>(key)};
      for (std::size_t i = 0; i < lw.size(); ++i)
        cand.word.push_back((*classes[i])[pos[i]]);
      if (!x.contains(cand)) {
        fail(out, witness_cap, MissingTransition{*members.front(), cand},
             first ? missing_total : 0);
        first = false;
        if (out.witnesses.size() >= witness_cap) break;
      }
      std::size_t i = 0;
      while (i < pos.size() && ++pos[i] == classes[i]->size()) pos[i++] = 0;
      if (i == pos.size()) break;
    }
  }
  return out;
}

AxiomReport classify(const Tsys& x, std::size_t witness_cap) {
  AxiomReport r;
  SplitIndex idx(x);
  check_multiset(x, witness_cap, r.multiset);
  check_splits(x, idx, witness_cap, r);

  std::vector<char> used(x.num_actions(), 0);
  for (const auto& t : x.transitions())
    if (t.word.size() == 1) used[t.word[0]] = 1;
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    if (!used[a]) fail(r.all_actions_used, witness_cap, static_cast<int>(a));

  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (const auto& t : x.transitions())
    if (t.word.size() == 1) parallel[{t.source, t.target}].push_back(t.word[0]);
  for (const auto& [ends, acts] : parallel)
    for (std::size_t i = 0; i < acts.size(); ++i)
      for (std::size_t j = i + 1; j < acts.size(); ++j)
        if (x.label(acts[i]) == x.label(acts[j]))
          fail(r.csa1, witness_cap,
               ParallelActions{ends.first, acts[i], acts[j], ends.second});

  std::map<std::string, std::vector<int>> by_label;
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    by_label[x.label(static_cast<int>(a))].push_back(static_cast<int>(a));
  for (const auto& [label, acts] : by_label)
    for (std::size_t i = 1; i < acts.size(); ++i)
      fail(r.deterministic_labelling, witness_cap,
           SharedLabel{acts[0], acts[i]});

  r.combinatorially_fibrant = check_fibrancy(x, witness_cap);
  return r;
}

bool is_weak(const Tsys& x) { return classify(x, 0).weak(); }
bool is_cubical(const Tsys& x) { return classify(x, 0).cubical(); }
bool is_regular(const Tsys& x) { return classify(x, 0).regular(); }
bool satisfies_csa1(const Tsys& x) { return classify(x, 0).csa1.pass; }
bool satisfies_csa2(const Tsys& x) {
  return classify(x, 0).unique_intermediate_state.pass;
}
bool is_combinatorially_fibrant(const Tsys& x) {
  return check_fibrancy(x, 0).pass;
}

std::string format_report(const Tsys& x, const AxiomReport& r) {
  std::ostringstream os;
  auto head = [&](const char* name, bool pass, std::size_t n) {
    os << name << ": " << (pass ? "pass" : "FAIL");
    if (!pass) os << " (" << n << " violation" << (n == 1 ? "" : "s") << ")";
    os << '\n';
  };
  head("multiset", r.multiset.pass, r.multiset.violations);
  for (const auto& w : r.multiset.witnesses)
    os << "  " << x.describe(w.present) << " present, " << x.describe(w.missing)
       << " absent\n";
  head("composition", r.composition.pass, r.composition.violations);
  for (const auto& w : r.composition.witnesses)
    os << "  " << x.describe(w.whole) << " p=" << w.p << " q=" << w.q
       << " requires " << x.describe(w.missing) << '\n';
  head("all_actions_used", r.all_actions_used.pass,
       r.all_actions_used.violations);
  for (int a : r.all_actions_used.witnesses)
    os << "  " << x.action_name(a) << " has no 1-transition\n";
  head("intermediate_state", r.intermediate_state.pass,
       r.intermediate_state.violations);
  for (const auto& w : r.intermediate_state.witnesses)
    os << "  " << x.describe(w.whole) << " p=" << w.p
       << " has no intermediate state\n";
  head("unique_intermediate_state", r.unique_intermediate_state.pass,
       r.unique_intermediate_state.violations);
  for (const auto& w : r.unique_intermediate_state.witnesses)
    os << "  " << x.describe(w.whole) << " p=" << w.p << " splits through {"
       << word_text(x, w.states) << "}\n";
  head("csa1", r.csa1.pass, r.csa1.violations);
  for (const auto& w : r.csa1.witnesses)
    os << "  " << x.action_name(w.first) << " and " << x.action_name(w.second)
       << " both go " << x.state_name(w.source) << " -> "
       << x.state_name(w.target) << '\n';
  head("deterministic_labelling", r.deterministic_labelling.pass,
       r.deterministic_labelling.violations);
  for (const auto& w : r.deterministic_labelling.witnesses)
    os << "  " << x.action_name(w.first) << " and " << x.action_name(w.second)
       << " share label " << x.label(w.first) << '\n';
  head("combinatorially_fibrant", r.combinatorially_fibrant.pass,
       r.combinatorially_fibrant.violations);
  for (const auto& w : r.combinatorially_fibrant.witnesses)
    os << "  " << x.describe(w.present) << " present, "
       << x.describe(w.missing) << " absent\n";
  os << "class: "
     << (r.regular() ? "regular" : r.cubical() ? "cubical" : r.weak() ? "weak" : "none")
     << '\n';
  return os.str();
}

}  // namespace hdts
