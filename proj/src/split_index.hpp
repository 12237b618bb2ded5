// Lookup of the states through which a transition splits.
#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "hdts/core.hpp"

namespace hdts::detail {

struct WordKey {
  int state;
  std::vector<int> word;
  bool operator==(const WordKey&) const = default;
};

struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const noexcept {
    return TransitionHash{}(Transition{k.state, k.word, 0});
  }
};

class SplitIndex {
 public:
  explicit SplitIndex(const Tsys& x) {
    for (const auto& t : x.transitions()) {
      from_[WordKey{t.source, t.word}].push_back(t.target);
      to_[WordKey{t.target, t.word}].push_back(t.source);
    }
  }

  // Sorted states nu with (source, u1..up, nu) and (nu, u(p+1)..un, target).
  std::vector<int> splits(const Transition& t, std::size_t p) const {
    std::vector<int> prefix(t.word.begin(), t.word.begin() + p);
    std::vector<int> suffix(t.word.begin() + p, t.word.end());
    auto a = from_.find(WordKey{t.source, prefix});
    auto b = to_.find(WordKey{t.target, suffix});
    std::vector<int> out;
    if (a == from_.end() || b == to_.end()) return out;
    for (int s : a->second)
      if (std::find(b->second.begin(), b->second.end(), s) != b->second.end())
        out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unordered_map<WordKey, std::vector<int>, WordKeyHash> from_, to_;
};

}  // namespace hdts::detail
