// Closure of transition sets under the weak axioms, and the constructions
// built on it (final lifts, quotients, images).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hdts/core.hpp"
#include "hdts/union_find.hpp"

namespace hdts {

// Smallest superset closed under permutation of words and under the
// composition rule.
std::vector<Transition> saturate_transitions(std::vector<Transition> ts);
Tsys saturate(const Tsys& x);

// A bare (states, labelled actions) pair with no transitions.
struct SetProfile {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, std::string>> actions;  // (name, label)
};

// One leg of a cone: images of every state and action of `source`, by
// profile name, indexed like the source's name tables.
struct ConeLeg {
  Tsys source;
  std::vector<std::string> state_images;
  std::vector<std::string> action_images;
};

// The least weak structure on `profile` making every leg a map. Throws
// MalformedCone on partial legs, unknown names or label mismatches.
Tsys final_lift(const SetProfile& profile, const std::vector<ConeLeg>& cone);

struct Quotient {
  Tsys object;
  TsMap map;  // x -> object
};

// Identifies states and actions along the given partitions (which must be
// sized to x). Each class is named by its least member; transitions are
// the saturated images.
Quotient quotient(const Tsys& x, DisjointSets& states, DisjointSets& actions);

struct ImageFactorization {
  TsMap onto;       // domain -> image
  TsMap inclusion;  // image -> codomain
};

ImageFactorization image_factor(const TsMap& f);

}  // namespace hdts
