// Colimits and products of systems, and the colimit-of-shapes
// coreflections.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hdts/core.hpp"
#include "hdts/search.hpp"

namespace hdts {

// Injective encoding of a pair of names as a single identifier. Uses
// "a:b" unless that collides within `pairs`, in which case every name is
// length-prefixed ("<len(a)>:a:b").
std::vector<std::string> pair_names(
    const std::vector<std::pair<std::string, std::string>>& pairs);

struct Coproduct {
  Tsys object;
  std::vector<TsMap> injections;
};

// Component i contributes its names prefixed with "i.".
Coproduct coproduct(const std::vector<Tsys>& parts);

enum class PushoutMode { Cts, Rts };

struct Pushout {
  Tsys object;
  TsMap leg_b;  // B -> D
  TsMap leg_c;  // C -> D
};

// Pushout of B <-f- A -g-> C. In Rts mode the result is reflected into the
// regular systems and the legs are composed with the unit.
Pushout pushout(const TsMap& f, const TsMap& g, PushoutMode mode);

struct Product {
  Tsys object;
  TsMap first;
  TsMap second;
};

// Requires cubical inputs.
Product product(const Tsys& x, const Tsys& y);

struct Coreflection {
  Tsys object;
  TsMap counit;  // object -> input
};

// Colimit, over the category of maps from `shapes` into x, of the shapes
// themselves.
Coreflection shape_colimit(const Tsys& x, const std::vector<Tsys>& shapes,
                           std::uint64_t budget = kDefaultBudget);

Coreflection cubification(const Tsys& x, std::uint64_t budget = kDefaultBudget);
Coreflection cts_coreflection(const Tsys& x,
                              std::uint64_t budget = kDefaultBudget);
Coreflection intermediate_saturation(const Tsys& x,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace hdts
