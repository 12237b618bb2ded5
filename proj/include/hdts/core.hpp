// Core data model: labelled transition systems with higher-dimensional
// transitions and the structure-preserving maps between them.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hdts {

// ---- errors ---------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSystem : public Error {
 public:
  explicit InvalidSystem(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class MalformedCone : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnresolvedReference : public Error {
 public:
  using Error::Error;
};

// ---- transitions ----------------------------------------------------------

// States and actions are referred to by their position in the owning
// system's sorted name table.
using StateIndex = int;
using ActionIndex = int;

struct Transition {
  StateIndex source = 0;
  std::vector<ActionIndex> word;
  StateIndex target = 0;

  std::size_t dimension() const { return word.size(); }
  friend auto operator<=>(const Transition&, const Transition&) = default;
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct TransitionHash {
  std::size_t operator()(const Transition& t) const noexcept;
};

struct NamedTransition {
  std::string source;
  std::vector<std::string> word;
  std::string target;
};

// Name-level description of a system. May be inconsistent; see validate().
struct TsysData {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, std::string>> actions;  // (name, label)
  std::vector<NamedTransition> transitions;
};

std::vector<std::string> validate(const TsysData& data);

// ---- systems --------------------------------------------------------------

// Immutable value type. Copies share storage.
class Tsys {
 public:
  Tsys();
  explicit Tsys(const TsysData& data);
  // Copy only: a moved-from system would lose its shared storage.
  Tsys(const Tsys&) = default;
  Tsys& operator=(const Tsys&) = default;

  // Builds from index-based data. Names need not be sorted; indices in
  // `transitions` refer to the given vectors. Duplicate transitions are
  // dropped. Throws InvalidSystem on bad indices, empty words or repeated
  // names.
  static Tsys from_indexed(std::vector<std::string> states,
                           std::vector<std::string> action_names,
                           std::vector<std::string> action_labels,
                           std::vector<Transition> transitions);

  std::size_t num_states() const;
  std::size_t num_actions() const;
  std::size_t num_transitions() const;

  const std::string& state_name(StateIndex s) const;
  const std::string& action_name(ActionIndex a) const;
  const std::string& label(ActionIndex a) const;
  const std::vector<std::string>& state_names() const;
  const std::vector<std::string>& action_names() const;
  const std::vector<std::string>& action_labels() const;

  // Sorted, duplicate free.
  const std::vector<Transition>& transitions() const;
  bool contains(const Transition& t) const;

  std::optional<StateIndex> find_state(std::string_view name) const;
  std::optional<ActionIndex> find_action(std::string_view name) const;
  StateIndex state(std::string_view name) const;    // throws std::out_of_range
  ActionIndex action(std::string_view name) const;  // throws std::out_of_range
  Transition transition(std::string_view source,
                        const std::vector<std::string>& word,
                        std::string_view target) const;

  std::size_t max_dimension() const;
  std::vector<std::string> labels() const;  // distinct, sorted
  TsysData to_data() const;
  std::string describe(const Transition& t) const;  // "(a,u,v,b)"

  friend bool operator==(const Tsys& a, const Tsys& b);

 private:
  struct Impl;
  explicit Tsys(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Incremental construction by name.
class TsysBuilder {
 public:
  StateIndex state(const std::string& name);
  ActionIndex action(const std::string& name, const std::string& label);
  void transition(StateIndex source, std::vector<ActionIndex> word,
                  StateIndex target);
  void transition(const std::string& source,
                  const std::vector<std::string>& word,
                  const std::string& target);
  Tsys build() const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> action_names_;
  std::vector<std::string> action_labels_;
  std::vector<Transition> transitions_;
};

// ---- maps -----------------------------------------------------------------

class TsMap {
 public:
  // Throws InvalidMap unless total, label preserving and transition
  // preserving.
  TsMap(Tsys domain, Tsys codomain, std::vector<StateIndex> state_map,
        std::vector<ActionIndex> action_map);

  static TsMap identity(const Tsys& x);
  static TsMap from_names(
      const Tsys& domain, const Tsys& codomain,
      const std::vector<std::pair<std::string, std::string>>& states,
      const std::vector<std::pair<std::string, std::string>>& actions);

  const Tsys& domain() const { return domain_; }
  const Tsys& codomain() const { return codomain_; }
  StateIndex state(StateIndex s) const { return state_map_[s]; }
  ActionIndex action(ActionIndex a) const { return action_map_[a]; }
  const std::vector<StateIndex>& state_map() const { return state_map_; }
  const std::vector<ActionIndex>& action_map() const { return action_map_; }
  Transition apply(const Transition& t) const;

  friend bool operator==(const TsMap& a, const TsMap& b);

 private:
  Tsys domain_;
  Tsys codomain_;
  std::vector<StateIndex> state_map_;
  std::vector<ActionIndex> action_map_;
};

// g after f.
TsMap compose(const TsMap& g, const TsMap& f);

bool injective_on_states(const TsMap& f);
bool injective_on_actions(const TsMap& f);
bool surjective_on_states(const TsMap& f);
bool surjective_on_actions(const TsMap& f);
bool surjective_on_transitions(const TsMap& f);

// Given f: X -> A surjective on states and actions and g: X -> B, returns
// the unique h: A -> B with h o f = g. Throws InvalidMap when g does not
// factor through f.
TsMap factor_through(const TsMap& f, const TsMap& g);

// Joint version: legs_i: X_i -> D jointly surjective, maps_i: X_i -> T.
TsMap copair(const std::vector<TsMap>& legs, const std::vector<TsMap>& maps);

}  // namespace hdts
