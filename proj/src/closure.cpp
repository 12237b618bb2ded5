#include "hdts/closure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace hdts {

namespace {

// (state, word) key for the split indices.
struct Key {
  int state;
  std::vector<int> word;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return TransitionHash{}(Transition{k.state, k.word, 0});
  }
};

class Saturator {
 public:
  explicit Saturator(std::vector<Transition> ts) {
    for (auto& t : ts) add(std::move(t));
  }

  std::vector<Transition> run() {
    while (!queue_.empty()) {
      int w = queue_.front();
      queue_.pop_front();
      queued_[w] = 0;
      fire(w);
    }
    std::vector<Transition> out(all_.begin(), all_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const std::vector<int>& lookup(
      const std::unordered_map<Key, std::vector<int>, KeyHash>& m, int state,
      const std::vector<int>& word) const {
    static const std::vector<int> empty;
    auto it = m.find(Key{state, word});
    return it == m.end() ? empty : it->second;
  }

  // States splitting whole transition t after position p.
  std::vector<int> splits(const Transition& t, std::size_t p) const {
    std::vector<int> prefix(t.word.begin(), t.word.begin() + p);
    std::vector<int> suffix(t.word.begin() + p, t.word.end());
    const auto& a = lookup(from_, t.source, prefix);
    const auto& b = lookup(to_, t.target, suffix);
    std::vector<int> out;
    for (int s : a)
      if (std::find(b.begin(), b.end(), s) != b.end()) out.push_back(s);
    return out;
  }

  void fire(int w) {
    const Transition t = all_[w];
    const std::size_t n = t.word.size();
    std::vector<Transition> found;
    for (std::size_t p = 1; p + 1 < n; ++p) {
      auto first = splits(t, p);
      if (first.empty()) continue;
      for (std::size_t q = 1; p + q < n; ++q) {
        auto second = splits(t, p + q);
        for (int nu1 : first)
          for (int nu2 : second)
            found.push_back(Transition{
                nu1,
                std::vector<int>(t.word.begin() + p, t.word.begin() + p + q),
                nu2});
      }
    }
    for (auto& f : found) add(std::move(f));
  }

  void add(Transition t) {
    if (t.word.empty()) return;
    std::vector<int> word = t.word;
    std::sort(word.begin(), word.end());
    do {
      insert(Transition{t.source, word, t.target});
    } while (std::next_permutation(word.begin(), word.end()));
  }

  void insert(Transition t) {
    if (set_.count(t)) return;
    set_.insert(t);
    const int idx = static_cast<int>(all_.size());
    all_.push_back(t);
    queued_.push_back(0);
    from_[Key{t.source, t.word}].push_back(t.target);
    to_[Key{t.target, t.word}].push_back(t.source);
    // t may serve as a whole transition or as a prefix/suffix premise of
    // a whole transition sharing its source/target.
    if (t.word.size() >= 3) {
      wholes_by_src_[t.source].push_back(idx);
      wholes_by_tgt_[t.target].push_back(idx);
      enqueue(idx);
    }
    for (int w : wholes_by_src_[t.source]) {
      const auto& ww = all_[w].word;
      if (ww.size() > t.word.size() &&
          std::equal(t.word.begin(), t.word.end(), ww.begin()))
        enqueue(w);
    }
    for (int w : wholes_by_tgt_[t.target]) {
      const auto& ww = all_[w].word;
      if (ww.size() > t.word.size() &&
          std::equal(t.word.rbegin(), t.word.rend(), ww.rbegin()))
        enqueue(w);
    }
  }

  void enqueue(int w) {
    if (queued_[w]) return;
    queued_[w] = 1;
    queue_.push_back(w);
  }

  std::unordered_set<Transition, TransitionHash> set_;
  std::vector<Transition> all_;
  std::vector<char> queued_;
  std::deque<int> queue_;
  std::unordered_map<Key, std::vector<int>, KeyHash> from_;
  std::unordered_map<Key, std::vector<int>, KeyHash> to_;
  std::unordered_map<int, std::vector<int>> wholes_by_src_;
  std::unordered_map<int, std::vector<int>> wholes_by_tgt_;
};

}  // namespace

std::vector<Transition> saturate_transitions(std::vector<Transition> ts) {
  return Saturator(std::move(ts)).run();
}

Tsys saturate(const Tsys& x) {
  return Tsys::from_indexed(x.state_names(), x.action_names(),
                            x.action_labels(),
                            saturate_transitions(x.transitions()));
}

Tsys final_lift(const SetProfile& profile, const std::vector<ConeLeg>& cone) {
  std::unordered_map<std::string, int> spos, apos;
  std::vector<std::string> names, labels;
  for (std::size_t i = 0; i < profile.states.size(); ++i)
    spos[profile.states[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < profile.actions.size(); ++i) {
    apos[profile.actions[i].first] = static_cast<int>(i);
    names.push_back(profile.actions[i].first);
    labels.push_back(profile.actions[i].second);
  }
  std::vector<Transition> images;
  for (std::size_t k = 0; k < cone.size(); ++k) {
    const ConeLeg& leg = cone[k];
    const std::string where = "cone leg " + std::to_string(k) + ": ";
    if (leg.state_images.size() != leg.source.num_states() ||
        leg.action_images.size() != leg.source.num_actions())
      throw MalformedCone(where + "map is not total");
    std::vector<int> s, a;
    for (const auto& n : leg.state_images) {
      auto it = spos.find(n);
      if (it == spos.end()) throw MalformedCone(where + "unknown state " + n);
      s.push_back(it->second);
    }
    for (std::size_t i = 0; i < leg.action_images.size(); ++i) {
      auto it = apos.find(leg.action_images[i]);
      if (it == apos.end())
        throw MalformedCone(where + "unknown action " + leg.action_images[i]);
      if (labels[it->second] != leg.source.label(static_cast<int>(i)))
        throw MalformedCone(where + "action " +
                            leg.source.action_name(static_cast<int>(i)) +
                            " changes label");
      a.push_back(it->second);
    }
    for (const auto& t : leg.source.transitions()) {
      Transition img{s[t.source], {}, s[t.target]};
      for (int x : t.word) img.word.push_back(a[x]);
      images.push_back(std::move(img));
    }
  }
  return Tsys::from_indexed(profile.states, names, labels,
                            saturate_transitions(std::move(images)));
}

Quotient quotient(const Tsys& x, DisjointSets& states, DisjointSets& actions) {
  // Classes are named by their least member; names are sorted, so the
  // least member is the one with the smallest index.
  std::vector<int> s_rep(x.num_states(), -1), a_rep(x.num_actions(), -1);
  std::vector<std::string> snames, anames, alabels;
  std::vector<int> smap(x.num_states()), amap(x.num_actions());
  std::unordered_map<int, int> s_class, a_class;
  for (std::size_t i = 0; i < x.num_states(); ++i) {
    int root = states.find(static_cast<int>(i));
    auto [it, fresh] = s_class.emplace(root, static_cast<int>(snames.size()));
    if (fresh) snames.push_back(x.state_name(static_cast<int>(i)));
    smap[i] = it->second;
  }
  for (std::size_t i = 0; i < x.num_actions(); ++i) {
    int root = actions.find(static_cast<int>(i));
    auto [it, fresh] = a_class.emplace(root, static_cast<int>(anames.size()));
    if (fresh) {
      anames.push_back(x.action_name(static_cast<int>(i)));
      alabels.push_back(x.label(static_cast<int>(i)));
    } else if (alabels[it->second] != x.label(static_cast<int>(i))) {
      throw PreconditionFailed("cannot identify actions with different labels");
    }
    amap[i] = it->second;
  }
  std::vector<Transition> images;
  for (const auto& t : x.transitions()) {
    Transition img{smap[t.source], {}, smap[t.target]};
    for (int a : t.word) img.word.push_back(amap[a]);
    images.push_back(std::move(img));
  }
  Tsys q = Tsys::from_indexed(snames, anames, alabels,
                              saturate_transitions(std::move(images)));
  // Indices in q follow sorted names; since class names were assigned in
  // increasing order they already coincide, but remap defensively.
  for (auto& s : smap) s = q.state(snames[s]);
  for (auto& a : amap) a = q.action(anames[a]);
  return Quotient{q, TsMap(x, q, std::move(smap), std::move(amap))};
}

ImageFactorization image_factor(const TsMap& f) {
  const Tsys& c = f.codomain();
  std::vector<char> s_hit(c.num_states(), 0), a_hit(c.num_actions(), 0);
  for (int s : f.state_map()) s_hit[s] = 1;
  for (int a : f.action_map()) a_hit[a] = 1;
  std::vector<std::string> snames, anames, alabels;
  std::vector<int> s_new(c.num_states(), -1), a_new(c.num_actions(), -1);
  for (std::size_t i = 0; i < c.num_states(); ++i)
    if (s_hit[i]) {
      s_new[i] = static_cast<int>(snames.size());
      snames.push_back(c.state_name(static_cast<int>(i)));
    }
  for (std::size_t i = 0; i < c.num_actions(); ++i)
    if (a_hit[i]) {
      a_new[i] = static_cast<int>(anames.size());
      anames.push_back(c.action_name(static_cast<int>(i)));
      alabels.push_back(c.label(static_cast<int>(i)));
    }
  std::vector<Transition> images;
  for (const auto& t : f.domain().transitions()) {
    Transition img = f.apply(t);
    img.source = s_new[img.source];
    img.target = s_new[img.target];
    for (int& a : img.word) a = a_new[a];
    images.push_back(std::move(img));
  }
  Tsys image = Tsys::from_indexed(snames, anames, alabels,
                                  saturate_transitions(std::move(images)));
  std::vector<int> onto_s, onto_a, inc_s, inc_a;
  for (int s : f.state_map()) onto_s.push_back(s_new[s]);
  for (int a : f.action_map()) onto_a.push_back(a_new[a]);
  for (const auto& n : image.state_names()) inc_s.push_back(c.state(n));
  for (const auto& n : image.action_names()) inc_a.push_back(c.action(n));
  return ImageFactorization{
      TsMap(f.domain(), image, std::move(onto_s), std::move(onto_a)),
      TsMap(image, c, std::move(inc_s), std::move(inc_a))};
}

}  // namespace hdts
