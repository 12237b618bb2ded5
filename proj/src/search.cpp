#include "hdts/search.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

namespace hdts {

namespace {

class HomEngine {
 public:
  using Visit = std::function<bool(const std::vector<StateIndex>&,
                                   const std::vector<ActionIndex>&)>;

  HomEngine(const Tsys& a, const Tsys& x, const HomSearchOptions& opt)
      : a_(a), x_(x), opt_(opt) {}

  void run(const Visit& visit) {
    visit_ = &visit;
    if (!prepare()) return;
    descend(0);
  }

 private:
  bool prepare() {
    const std::size_t as = a_.num_states(), xs = x_.num_states();
    const std::size_t aa = a_.num_actions(), xa = x_.num_actions();
    if (opt_.injective && (as > xs || aa > xa)) return false;
    smap_.assign(as, -1);
    amap_.assign(aa, -1);
    s_used_.assign(xs, 0);
    a_used_.assign(xa, 0);

    s_cand_.assign(as, {});
    for (std::size_t s = 0; s < as; ++s) {
      if (!opt_.state_candidates.empty() && opt_.state_candidates[s]) {
        for (int y : *opt_.state_candidates[s])
          if (y >= 0 && y < static_cast<int>(xs)) s_cand_[s].push_back(y);
        std::sort(s_cand_[s].begin(), s_cand_[s].end());
        s_cand_[s].erase(std::unique(s_cand_[s].begin(), s_cand_[s].end()),
                         s_cand_[s].end());
      } else {
        for (std::size_t y = 0; y < xs; ++y)
          s_cand_[s].push_back(static_cast<int>(y));
      }
      if (s_cand_[s].empty()) return false;
    }
    s_ok_.assign(as, std::vector<char>(xs, 0));
    for (std::size_t s = 0; s < as; ++s)
      for (int y : s_cand_[s]) s_ok_[s][y] = 1;

    a_cand_.assign(aa, {});
    a_ok_.assign(aa, std::vector<char>(xa, 0));
    for (std::size_t a = 0; a < aa; ++a) {
      std::vector<char> allowed(xa, 1);
      if (!opt_.action_candidates.empty() && opt_.action_candidates[a]) {
        std::fill(allowed.begin(), allowed.end(), 0);
        for (int y : *opt_.action_candidates[a])
          if (y >= 0 && y < static_cast<int>(xa)) allowed[y] = 1;
      }
      for (std::size_t y = 0; y < xa; ++y)
        if (allowed[y] && a_.label(static_cast<int>(a)) ==
                              x_.label(static_cast<int>(y))) {
          a_cand_[a].push_back(static_cast<int>(y));
          a_ok_[a][y] = 1;
        }
      if (a_cand_[a].empty()) return false;
    }

    // Index the codomain transitions by length and endpoint.
    const auto& xt = x_.transitions();
    std::size_t maxlen = 0;
    for (const auto& t : xt) maxlen = std::max(maxlen, t.word.size());
    by_len_.assign(maxlen + 1, {});
    by_src_.assign(maxlen + 1, std::vector<std::vector<int>>(xs));
    by_tgt_.assign(maxlen + 1, std::vector<std::vector<int>>(xs));
    for (std::size_t i = 0; i < xt.size(); ++i) {
      const auto& t = xt[i];
      by_len_[t.word.size()].push_back(static_cast<int>(i));
      by_src_[t.word.size()][t.source].push_back(static_cast<int>(i));
      by_tgt_[t.word.size()][t.target].push_back(static_cast<int>(i));
    }
    for (const auto& t : a_.transitions())
      if (t.word.size() > maxlen) return false;

    order_transitions();

    // Elements not covered by any transition are enumerated freely.
    std::vector<char> s_cov(as, 0), a_cov(aa, 0);
    for (const auto& t : a_.transitions()) {
      s_cov[t.source] = s_cov[t.target] = 1;
      for (int a : t.word) a_cov[a] = 1;
    }
    for (std::size_t s = 0; s < as; ++s)
      if (!s_cov[s]) free_states_.push_back(static_cast<int>(s));
    for (std::size_t a = 0; a < aa; ++a)
      if (!a_cov[a]) free_actions_.push_back(static_cast<int>(a));
    return true;
  }

  // Greedy static order: prefer transitions whose elements are already
  // fixed by earlier ones, so most later steps reduce to a lookup.
  void order_transitions() {
    const auto& at = a_.transitions();
    const std::size_t n = at.size();
    std::vector<char> taken(n, 0);
    std::vector<char> s_cov(a_.num_states(), 0), a_cov(a_.num_actions(), 0);
    for (std::size_t step = 0; step < n; ++step) {
      long best = -1;
      long best_score = -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        const auto& t = at[i];
        long covered = s_cov[t.source] + s_cov[t.target];
        long total = 2;
        for (int a : t.word) {
          covered += a_cov[a];
          ++total;
        }
        long score = (covered == total ? 1'000'000 : 0) + covered * 1000 +
                     static_cast<long>(t.word.size());
        if (score > best_score) {
          best_score = score;
          best = static_cast<long>(i);
        }
      }
      taken[best] = 1;
      order_.push_back(static_cast<int>(best));
      const auto& t = at[best];
      s_cov[t.source] = s_cov[t.target] = 1;
      for (int a : t.word) a_cov[a] = 1;
    }
  }

  void tick() {
    if (++steps_ > opt_.budget)
      throw SizeLimitExceeded("map search exceeded the budget of " +
                              std::to_string(opt_.budget) + " nodes");
  }

  bool assign_state(int s, int y) {
    if (smap_[s] != -1) return smap_[s] == y;
    if (!s_ok_[s][y]) return false;
    if (opt_.injective && s_used_[y]) return false;
    smap_[s] = y;
    ++s_used_[y];
    trail_.push_back(s);
    return true;
  }

  bool assign_action(int a, int y) {
    if (amap_[a] != -1) return amap_[a] == y;
    if (!a_ok_[a][y]) return false;
    if (opt_.injective && a_used_[y]) return false;
    amap_[a] = y;
    ++a_used_[y];
    trail_.push_back(~a);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      if (v >= 0) {
        --s_used_[smap_[v]];
        smap_[v] = -1;
      } else {
        --a_used_[amap_[~v]];
        amap_[~v] = -1;
      }
    }
  }

  bool descend(std::size_t k) {
    if (k == order_.size()) return free_state(0);
    tick();
    const Transition& t = a_.transitions()[order_[k]];
    bool fixed = smap_[t.source] != -1 && smap_[t.target] != -1;
    for (int a : t.word) fixed = fixed && amap_[a] != -1;
    if (fixed) {
      Transition img{smap_[t.source], {}, smap_[t.target]};
      for (int a : t.word) img.word.push_back(amap_[a]);
      if (!x_.contains(img)) return true;
      return descend(k + 1);
    }
    const std::size_t len = t.word.size();
    const std::vector<int>* cands = &by_len_[len];
    if (smap_[t.source] != -1)
      cands = &by_src_[len][smap_[t.source]];
    else if (smap_[t.target] != -1)
      cands = &by_tgt_[len][smap_[t.target]];
    const auto& xt = x_.transitions();
    for (int ci : *cands) {
      tick();
      const Transition& y = xt[ci];
      std::size_t mark = trail_.size();
      bool ok = assign_state(t.source, y.source) &&
                assign_state(t.target, y.target);
      for (std::size_t i = 0; ok && i < len; ++i)
        ok = assign_action(t.word[i], y.word[i]);
      if (ok && !descend(k + 1)) {
        undo_to(mark);
        return false;
      }
      undo_to(mark);
    }
    return true;
  }

  bool free_state(std::size_t k) {
    if (k == free_states_.size()) return free_action(0);
    int s = free_states_[k];
    for (int y : s_cand_[s]) {
      tick();
      std::size_t mark = trail_.size();
      if (assign_state(s, y) && !free_state(k + 1)) {
        undo_to(mark);
        return false;
      }
      undo_to(mark);
    }
    return true;
  }

  bool free_action(std::size_t k) {
    if (k == free_actions_.size()) return (*visit_)(smap_, amap_);
    int a = free_actions_[k];
    for (int y : a_cand_[a]) {
      tick();
      std::size_t mark = trail_.size();
      if (assign_action(a, y) && !free_action(k + 1)) {
        undo_to(mark);
        return false;
      }
      undo_to(mark);
    }
    return true;
  }

  const Tsys& a_;
  const Tsys& x_;
  const HomSearchOptions& opt_;
  const Visit* visit_ = nullptr;
  std::uint64_t steps_ = 0;

  std::vector<int> smap_, amap_, s_used_, a_used_, trail_;
  std::vector<std::vector<int>> s_cand_, a_cand_;
  std::vector<std::vector<char>> s_ok_, a_ok_;
  std::vector<std::vector<int>> by_len_;
  std::vector<std::vector<std::vector<int>>> by_src_, by_tgt_;
  std::vector<int> order_, free_states_, free_actions_;
};

// Isomorphism invariant of a state: its incident transitions by direction,
// length and label word.
std::vector<std::string> state_signatures(const Tsys& x) {
  std::vector<std::vector<std::string>> parts(x.num_states());
  for (const auto& t : x.transitions()) {
    std::vector<std::string> labels;
    for (int a : t.word) labels.push_back(x.label(a));
    std::sort(labels.begin(), labels.end());
    std::string key;
    for (const auto& l : labels) key += l + '\x1f';
    parts[t.source].push_back("o" + key);
    parts[t.target].push_back("i" + key);
  }
  std::vector<std::string> out;
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    std::string s;
    for (const auto& k : p) s += k + '\x1e';
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> action_signatures(const Tsys& x) {
  std::vector<std::map<std::size_t, int>> uses(x.num_actions());
  for (const auto& t : x.transitions())
    for (int a : t.word) ++uses[a][t.word.size()];
  std::vector<std::string> out;
  for (std::size_t a = 0; a < x.num_actions(); ++a) {
    std::string s = x.label(static_cast<int>(a)) + '\x1f';
    for (const auto& [len, n] : uses[a])
      s += std::to_string(len) + ":" + std::to_string(n) + ";";
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

void for_each_hom(const Tsys& a, const Tsys& x,
                  const HomSearchOptions& options,
                  const std::function<bool(const std::vector<StateIndex>&,
                                           const std::vector<ActionIndex>&)>&
                      visit) {
  HomEngine engine(a, x, options);
  engine.run(visit);
}

std::vector<TsMap> hom_search(const Tsys& a, const Tsys& x,
                              const HomSearchOptions& options) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
  for_each_hom(a, x, options, [&](const auto& s, const auto& m) {
    found.emplace_back(s, m);
    return true;
  });
  std::sort(found.begin(), found.end());
  std::vector<TsMap> out;
  out.reserve(found.size());
  for (auto& [s, m] : found) out.emplace_back(a, x, std::move(s), std::move(m));
  return out;
}

std::uint64_t hom_count(const Tsys& a, const Tsys& x,
                        const HomSearchOptions& options) {
  std::uint64_t n = 0;
  for_each_hom(a, x, options, [&](const auto&, const auto&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<TsMap> find_hom(const Tsys& a, const Tsys& x,
                              const HomSearchOptions& options) {
  std::optional<TsMap> out;
  for_each_hom(a, x, options, [&](const auto& s, const auto& m) {
    out.emplace(a, x, s, m);
    return false;
  });
  return out;
}

std::optional<TsMap> iso_search(const Tsys& x, const Tsys& y,
                                std::uint64_t budget) {
  if (x.num_states() != y.num_states() || x.num_actions() != y.num_actions() ||
      x.num_transitions() != y.num_transitions())
    return std::nullopt;
  auto xs = state_signatures(x), ys = state_signatures(y);
  auto xa = action_signatures(x), ya = action_signatures(y);
  {
    auto a = xs, b = ys, c = xa, d = ya;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    std::sort(d.begin(), d.end());
    if (a != b || c != d) return std::nullopt;
  }
  HomSearchOptions opt;
  opt.budget = budget;
  opt.injective = true;
  opt.state_candidates.resize(x.num_states());
  opt.action_candidates.resize(x.num_actions());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<int> c;
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (xs[i] == ys[j]) c.push_back(static_cast<int>(j));
    opt.state_candidates[i] = std::move(c);
  }
  for (std::size_t i = 0; i < xa.size(); ++i) {
    std::vector<int> c;
    for (std::size_t j = 0; j < ya.size(); ++j)
      if (xa[i] == ya[j]) c.push_back(static_cast<int>(j));
    opt.action_candidates[i] = std::move(c);
  }
  return find_hom(x, y, opt);
}

bool is_isomorphic(const Tsys& x, const Tsys& y, std::uint64_t budget) {
  return iso_search(x, y, budget).has_value();
}

bool is_iso_map(const TsMap& f) {
  if (f.domain().num_states() != f.codomain().num_states() ||
      f.domain().num_actions() != f.codomain().num_actions() ||
      f.domain().num_transitions() != f.codomain().num_transitions())
    return false;
  // Injective on states and actions makes the transition map injective.
  return injective_on_states(f) && injective_on_actions(f);
}

}  // namespace hdts
