// Checkers for the axioms a system may satisfy, with counterexamples.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

inline constexpr std::size_t kWitnessCap = 32;

// A transition and a tuple whose absence breaks closure.
struct MissingTransition {
  Transition present;
  Transition missing;
};

struct CompositionFailure {
  Transition whole;
  std::size_t p = 0;
  std::size_t q = 0;
  StateIndex nu1 = 0;
  StateIndex nu2 = 0;
  Transition missing;
};

struct SplitFailure {
  Transition whole;
  std::size_t p = 0;
  std::vector<StateIndex> states;  // intermediate states found (0 or >= 2)
};

struct ParallelActions {
  StateIndex source = 0;
  ActionIndex first = 0;
  ActionIndex second = 0;
  StateIndex target = 0;
};

struct SharedLabel {
  ActionIndex first = 0;
  ActionIndex second = 0;
};

template <class W>
struct AxiomCheck {
  bool pass = true;
  std::size_t violations = 0;
  std::vector<W> witnesses;  // at most the cap
};

struct AxiomReport {
  AxiomCheck<MissingTransition> multiset;
  AxiomCheck<CompositionFailure> composition;
  AxiomCheck<ActionIndex> all_actions_used;
  AxiomCheck<SplitFailure> intermediate_state;
  AxiomCheck<SplitFailure> unique_intermediate_state;
  AxiomCheck<ParallelActions> csa1;
  AxiomCheck<SharedLabel> deterministic_labelling;
  AxiomCheck<MissingTransition> combinatorially_fibrant;

  bool weak() const { return multiset.pass && composition.pass; }
  bool cubical() const {
    return weak() && all_actions_used.pass && intermediate_state.pass;
  }
  bool regular() const { return cubical() && unique_intermediate_state.pass; }
};

AxiomReport classify(const Tsys& x, std::size_t witness_cap = kWitnessCap);

bool is_weak(const Tsys& x);
bool is_cubical(const Tsys& x);
bool is_regular(const Tsys& x);
bool satisfies_csa1(const Tsys& x);
bool satisfies_csa2(const Tsys& x);
AxiomCheck<MissingTransition> check_fibrancy(
    const Tsys& x, std::size_t witness_cap = kWitnessCap);
bool is_combinatorially_fibrant(const Tsys& x);

// Human-readable rendering of a report, one axiom per line.
std::string format_report(const Tsys& x, const AxiomReport& r);

}  // namespace hdts
