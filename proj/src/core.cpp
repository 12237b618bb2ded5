#include "hdts/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hdts {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string summarize(const std::vector<std::string>& violations) {
  std::string msg = "invalid transition system";
  if (!violations.empty()) msg += ": " + violations.front();
  if (violations.size() > 1)
    msg += " (+" + std::to_string(violations.size() - 1) + " more)";
  return msg;
}

}  // namespace

InvalidSystem::InvalidSystem(std::vector<std::string> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t column)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::size_t TransitionHash::operator()(const Transition& t) const noexcept {
  std::size_t h = std::hash<int>{}(t.source) * 1000003u ^
                  std::hash<int>{}(t.target);
  for (int a : t.word) h = h * 31u + static_cast<std::size_t>(a) + 0x9e37u;
  return h;
}

// ---- validation -----------------------------------------------------------

std::vector<std::string> validate(const TsysData& data) {
  std::vector<std::string> out;
  std::set<std::string> states;
  std::set<std::string> actions;
  for (const auto& s : data.states)
    if (!states.insert(s).second) out.push_back("duplicate state " + s);
  for (const auto& [name, label] : data.actions) {
    if (!actions.insert(name).second) out.push_back("duplicate action " + name);
    if (label.empty()) out.push_back("action " + name + " has an empty label");
  }
  std::set<std::tuple<std::string, std::vector<std::string>, std::string>>
      seen;
  for (const auto& t : data.transitions) {
    std::string shown =
        "(" + t.source + "," + join(t.word, ",") + "," + t.target + ")";
    if (!states.count(t.source))
      out.push_back("transition " + shown + " has undeclared source " +
                    t.source);
    if (!states.count(t.target))
      out.push_back("transition " + shown + " has undeclared target " +
                    t.target);
    if (t.word.empty())
      out.push_back("transition " + shown + " has an empty word");
    for (const auto& a : t.word)
      if (!actions.count(a))
        out.push_back("transition " + shown + " uses undeclared action " + a);
    if (!seen.insert({t.source, t.word, t.target}).second)
      out.push_back("duplicate transition " + shown);
  }
  return out;
}

// ---- Tsys -----------------------------------------------------------------

struct Tsys::Impl {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<std::string> labels;
  std::vector<Transition> transitions;
  std::unordered_set<Transition, TransitionHash> lookup;
  std::unordered_map<std::string, int> state_pos;
  std::unordered_map<std::string, int> action_pos;
};

Tsys::Tsys() : impl_(std::make_shared<Impl>()) {}

Tsys::Tsys(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Tsys::Tsys(const TsysData& data) {
  auto violations = validate(data);
  if (!violations.empty()) throw InvalidSystem(std::move(violations));
  std::vector<std::string> names;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> spos;
  std::unordered_map<std::string, int> apos;
  for (std::size_t i = 0; i < data.states.size(); ++i)
    spos[data.states[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < data.actions.size(); ++i) {
    names.push_back(data.actions[i].first);
    labels.push_back(data.actions[i].second);
    apos[data.actions[i].first] = static_cast<int>(i);
  }
  std::vector<Transition> ts;
  for (const auto& t : data.transitions) {
    Transition x;
    x.source = spos.at(t.source);
    x.target = spos.at(t.target);
    for (const auto& a : t.word) x.word.push_back(apos.at(a));
    ts.push_back(std::move(x));
  }
  *this = from_indexed(data.states, std::move(names), std::move(labels),
                       std::move(ts));
}

Tsys Tsys::from_indexed(std::vector<std::string> states,
                        std::vector<std::string> action_names,
                        std::vector<std::string> action_labels,
                        std::vector<Transition> transitions) {
  if (action_names.size() != action_labels.size())
    throw InvalidSystem({"action names and labels differ in length"});
  std::vector<std::string> violations;
  const int ns = static_cast<int>(states.size());
  const int na = static_cast<int>(action_names.size());

  std::vector<int> sorder(states.size());
  std::iota(sorder.begin(), sorder.end(), 0);
  std::sort(sorder.begin(), sorder.end(),
            [&](int a, int b) { return states[a] < states[b]; });
  std::vector<int> aorder(action_names.size());
  std::iota(aorder.begin(), aorder.end(), 0);
  std::sort(aorder.begin(), aorder.end(),
            [&](int a, int b) { return action_names[a] < action_names[b]; });

  auto impl = std::make_shared<Impl>();
  std::vector<int> snew(states.size());
  std::vector<int> anew(action_names.size());
  for (std::size_t i = 0; i < sorder.size(); ++i) {
    snew[sorder[i]] = static_cast<int>(i);
    impl->states.push_back(states[sorder[i]]);
    if (i && impl->states[i] == impl->states[i - 1])
      violations.push_back("duplicate state " + impl->states[i]);
  }
  for (std::size_t i = 0; i < aorder.size(); ++i) {
    anew[aorder[i]] = static_cast<int>(i);
    impl->actions.push_back(action_names[aorder[i]]);
    impl->labels.push_back(action_labels[aorder[i]]);
    if (i && impl->actions[i] == impl->actions[i - 1])
      violations.push_back("duplicate action " + impl->actions[i]);
    if (impl->labels.back().empty())
      violations.push_back("action " + impl->actions[i] + " has an empty label");
  }
  for (auto& t : transitions) {
    bool ok = t.source >= 0 && t.source < ns && t.target >= 0 && t.target < ns;
    if (t.word.empty()) {
      violations.push_back("transition with an empty word");
      continue;
    }
    for (int a : t.word) ok = ok && a >= 0 && a < na;
    if (!ok) {
      violations.push_back("transition refers to an undeclared element");
      continue;
    }
    t.source = snew[t.source];
    t.target = snew[t.target];
    for (int& a : t.word) a = anew[a];
  }
  if (!violations.empty()) throw InvalidSystem(std::move(violations));
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()),
                    transitions.end());
  impl->transitions = std::move(transitions);
  impl->lookup.insert(impl->transitions.begin(), impl->transitions.end());
  for (std::size_t i = 0; i < impl->states.size(); ++i)
    impl->state_pos[impl->states[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < impl->actions.size(); ++i)
    impl->action_pos[impl->actions[i]] = static_cast<int>(i);
  return Tsys(std::shared_ptr<const Impl>(std::move(impl)));
}

std::size_t Tsys::num_states() const { return impl_->states.size(); }
std::size_t Tsys::num_actions() const { return impl_->actions.size(); }
std::size_t Tsys::num_transitions() const { return impl_->transitions.size(); }
const std::string& Tsys::state_name(StateIndex s) const {
  return impl_->states.at(s);
}
const std::string& Tsys::action_name(ActionIndex a) const {
  return impl_->actions.at(a);
}
const std::string& Tsys::label(ActionIndex a) const {
  return impl_->labels.at(a);
}
const std::vector<std::string>& Tsys::state_names() const {
  return impl_->states;
}
const std::vector<std::string>& Tsys::action_names() const {
  return impl_->actions;
}
const std::vector<std::string>& Tsys::action_labels() const {
  return impl_->labels;
}
const std::vector<Transition>& Tsys::transitions() const {
  return impl_->transitions;
}
bool Tsys::contains(const Transition& t) const {
  return impl_->lookup.count(t) != 0;
}

std::optional<StateIndex> Tsys::find_state(std::string_view name) const {
  auto it = impl_->state_pos.find(std::string(name));
  if (it == impl_->state_pos.end()) return std::nullopt;
  return it->second;
}

std::optional<ActionIndex> Tsys::find_action(std::string_view name) const {
  auto it = impl_->action_pos.find(std::string(name));
  if (it == impl_->action_pos.end()) return std::nullopt;
  return it->second;
}

StateIndex Tsys::state(std::string_view name) const {
  auto s = find_state(name);
  if (!s) throw std::out_of_range("no state named " + std::string(name));
  return *s;
}

ActionIndex Tsys::action(std::string_view name) const {
  auto a = find_action(name);
  if (!a) throw std::out_of_range("no action named " + std::string(name));
  return *a;
}

Transition Tsys::transition(std::string_view source,
                            const std::vector<std::string>& word,
                            std::string_view target) const {
  Transition t;
  t.source = state(source);
  t.target = state(target);
  for (const auto& a : word) t.word.push_back(action(a));
  return t;
}

std::size_t Tsys::max_dimension() const {
  std::size_t m = 0;
  for (const auto& t : impl_->transitions) m = std::max(m, t.word.size());
  return m;
}

std::vector<std::string> Tsys::labels() const {
  std::vector<std::string> out = impl_->labels;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TsysData Tsys::to_data() const {
  TsysData d;
  d.states = impl_->states;
  for (std::size_t i = 0; i < impl_->actions.size(); ++i)
    d.actions.emplace_back(impl_->actions[i], impl_->labels[i]);
  for (const auto& t : impl_->transitions) {
    NamedTransition n;
    n.source = impl_->states[t.source];
    n.target = impl_->states[t.target];
    for (int a : t.word) n.word.push_back(impl_->actions[a]);
    d.transitions.push_back(std::move(n));
  }
  return d;
}

std::string Tsys::describe(const Transition& t) const {
  std::string out = "(" + state_name(t.source);
  for (int a : t.word) out += "," + action_name(a);
  return out + "," + state_name(t.target) + ")";
}

bool operator==(const Tsys& a, const Tsys& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->states == b.impl_->states &&
         a.impl_->actions == b.impl_->actions &&
         a.impl_->labels == b.impl_->labels &&
         a.impl_->transitions == b.impl_->transitions;
}

// ---- builder --------------------------------------------------------------

StateIndex TsysBuilder::state(const std::string& name) {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it != states_.end()) return static_cast<int>(it - states_.begin());
  states_.push_back(name);
  return static_cast<int>(states_.size() - 1);
}

ActionIndex TsysBuilder::action(const std::string& name,
                                const std::string& label) {
  auto it = std::find(action_names_.begin(), action_names_.end(), name);
  if (it != action_names_.end()) {
    auto i = it - action_names_.begin();
    if (action_labels_[i] != label)
      throw InvalidSystem({"action " + name + " declared with two labels"});
    return static_cast<int>(i);
  }
  action_names_.push_back(name);
  action_labels_.push_back(label);
  return static_cast<int>(action_names_.size() - 1);
}

void TsysBuilder::transition(StateIndex source, std::vector<ActionIndex> word,
                             StateIndex target) {
  transitions_.push_back({source, std::move(word), target});
}

void TsysBuilder::transition(const std::string& source,
                             const std::vector<std::string>& word,
                             const std::string& target) {
  Transition t;
  t.source = state(source);
  t.target = state(target);
  for (const auto& a : word) {
    auto it = std::find(action_names_.begin(), action_names_.end(), a);
    if (it == action_names_.end())
      throw InvalidSystem({"undeclared action " + a});
    t.word.push_back(static_cast<int>(it - action_names_.begin()));
  }
  transitions_.push_back(std::move(t));
}

Tsys TsysBuilder::build() const {
  return Tsys::from_indexed(states_, action_names_, action_labels_,
                            transitions_);
}

// ---- maps -----------------------------------------------------------------

TsMap::TsMap(Tsys domain, Tsys codomain, std::vector<StateIndex> state_map,
             std::vector<ActionIndex> action_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      state_map_(std::move(state_map)),
      action_map_(std::move(action_map)) {
  if (state_map_.size() != domain_.num_states() ||
      action_map_.size() != domain_.num_actions())
    throw InvalidMap("map is not total");
  const int ns = static_cast<int>(codomain_.num_states());
  const int na = static_cast<int>(codomain_.num_actions());
  for (int s : state_map_)
    if (s < 0 || s >= ns) throw InvalidMap("state image out of range");
  for (std::size_t a = 0; a < action_map_.size(); ++a) {
    int b = action_map_[a];
    if (b < 0 || b >= na) throw InvalidMap("action image out of range");
    if (domain_.label(static_cast<int>(a)) != codomain_.label(b))
      throw InvalidMap("action " + domain_.action_name(static_cast<int>(a)) +
                       " is sent to " + codomain_.action_name(b) +
                       " with a different label");
  }
  for (const auto& t : domain_.transitions())
    if (!codomain_.contains(apply(t)))
      throw InvalidMap("image of " + domain_.describe(t) +
                       " is not a transition");
}

TsMap TsMap::identity(const Tsys& x) {
  std::vector<int> s(x.num_states());
  std::vector<int> a(x.num_actions());
  std::iota(s.begin(), s.end(), 0);
  std::iota(a.begin(), a.end(), 0);
  return TsMap(x, x, std::move(s), std::move(a));
}

TsMap TsMap::from_names(
    const Tsys& domain, const Tsys& codomain,
    const std::vector<std::pair<std::string, std::string>>& states,
    const std::vector<std::pair<std::string, std::string>>& actions) {
  std::vector<int> s(domain.num_states(), -1);
  std::vector<int> a(domain.num_actions(), -1);
  for (const auto& [x, y] : states) s[domain.state(x)] = codomain.state(y);
  for (const auto& [x, y] : actions) a[domain.action(x)] = codomain.action(y);
  return TsMap(domain, codomain, std::move(s), std::move(a));
}

Transition TsMap::apply(const Transition& t) const {
  Transition out;
  out.source = state_map_[t.source];
  out.target = state_map_[t.target];
  out.word.reserve(t.word.size());
  for (int a : t.word) out.word.push_back(action_map_[a]);
  return out;
}

bool operator==(const TsMap& a, const TsMap& b) {
  return a.state_map_ == b.state_map_ && a.action_map_ == b.action_map_ &&
         a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
}

TsMap compose(const TsMap& g, const TsMap& f) {
  if (!(f.codomain() == g.domain()))
    throw InvalidMap("cannot compose: codomain and domain differ");
  std::vector<int> s(f.domain().num_states());
  std::vector<int> a(f.domain().num_actions());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = g.state(f.state(i));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.action(f.action(i));
  return TsMap(f.domain(), g.codomain(), std::move(s), std::move(a));
}

namespace {

bool injective(const std::vector<int>& v) {
  std::vector<int> c = v;
  std::sort(c.begin(), c.end());
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

bool surjective(const std::vector<int>& v, std::size_t n) {
  std::vector<char> hit(n, 0);
  for (int x : v) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace

bool injective_on_states(const TsMap& f) { return injective(f.state_map()); }
bool injective_on_actions(const TsMap& f) { return injective(f.action_map()); }
bool surjective_on_states(const TsMap& f) {
  return surjective(f.state_map(), f.codomain().num_states());
}
bool surjective_on_actions(const TsMap& f) {
  return surjective(f.action_map(), f.codomain().num_actions());
}
bool surjective_on_transitions(const TsMap& f) {
  std::unordered_set<Transition, TransitionHash> image;
  for (const auto& t : f.domain().transitions()) image.insert(f.apply(t));
  return image.size() == f.codomain().num_transitions();
}

TsMap copair(const std::vector<TsMap>& legs, const std::vector<TsMap>& maps) {
  if (legs.empty() || legs.size() != maps.size())
    throw InvalidMap("copair needs one map per leg");
  const Tsys& d = legs.front().codomain();
  const Tsys& t = maps.front().codomain();
  std::vector<int> s(d.num_states(), -1);
  std::vector<int> a(d.num_actions(), -1);
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const TsMap& leg = legs[k];
    const TsMap& m = maps[k];
    if (!(leg.domain() == m.domain()))
      throw InvalidMap("copair: leg and map have different domains");
    for (std::size_t i = 0; i < leg.state_map().size(); ++i) {
      int& slot = s[leg.state(i)];
      if (slot != -1 && slot != m.state(i))
        throw InvalidMap("copair: maps disagree on state " +
                         d.state_name(leg.state(i)));
      slot = m.state(i);
    }
    for (std::size_t i = 0; i < leg.action_map().size(); ++i) {
      int& slot = a[leg.action(i)];
      if (slot != -1 && slot != m.action(i))
        throw InvalidMap("copair: maps disagree on action " +
                         d.action_name(leg.action(i)));
      slot = m.action(i);
    }
  }
  for (int x : s)
    if (x < 0) throw InvalidMap("copair: legs are not jointly surjective");
  for (int x : a)
    if (x < 0) throw InvalidMap("copair: legs are not jointly surjective");
  return TsMap(d, t, std::move(s), std::move(a));
}

TsMap factor_through(const TsMap& f, const TsMap& g) {
  return copair({f}, {g});
}

}  // namespace hdts
