// Reflections onto the subcategories cut out by CSA2, CSA1 and injective
// labelling, with their units.
#pragma once

#include <string>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

enum class ReflectorKind { Csa2, Csa1Cts, Csa1Rts, LsCts, LsRts };

ReflectorKind parse_reflector_kind(const std::string& name);  // "csa2", ...
std::string to_string(ReflectorKind kind);

struct MergeEvent {
  enum class Kind { State, Action };
  Kind kind;
  std::string first;
  std::string second;
  friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

struct Reflection {
  Tsys object;
  TsMap unit;  // input -> object
  std::vector<MergeEvent> trace;
};

// Requires a cubical input.
Reflection csa2_reflect(const Tsys& x);
Reflection csa1_reflect_cts(const Tsys& x);
Reflection ls_reflect_cts(const Tsys& x);
// Require a regular input.
Reflection csa1_reflect_rts(const Tsys& x);
Reflection ls_reflect_rts(const Tsys& x);

Reflection reflect(ReflectorKind kind, const Tsys& x);

// The image of f under the reflector: the map R(dom f) -> R(cod f) making
// the unit square commute.
TsMap induced_map(ReflectorKind kind, const TsMap& f);

}  // namespace hdts
