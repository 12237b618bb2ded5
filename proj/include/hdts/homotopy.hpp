// Cylinders, path objects, homotopies and the decidable parts of the model
// structures (weak equivalences, fibrant objects, lifting).
#pragma once

#include <cstdint>
#include <string>

#include "hdts/core.hpp"
#include "hdts/search.hpp"

namespace hdts {

struct Cylinder {
  Tsys object;
  TsMap gamma0;  // x -> cyl(x), u |-> u:0
  TsMap gamma1;  // x -> cyl(x), u |-> u:1
  TsMap sigma;   // cyl(x) -> x
};

// Same states; actions doubled; a word is a transition when its projection
// is. Requires a cubical input.
Cylinder cyl(const Tsys& x);

struct PathObject {
  Tsys object;
  TsMap eval0;  // cocyl(x) -> x, (u,v) |-> u
  TsMap eval1;  // cocyl(x) -> x, (u,v) |-> v
};

// Path object. Uses the direct formula on combinatorially fibrant inputs
// and the general construction otherwise. Requires a cubical input.
PathObject cocyl(const Tsys& x, std::uint64_t budget = kDefaultBudget);
// Direct formula: a word of label-matching pairs is a transition when some
// choice of coordinates is.
Tsys cocyl_fast(const Tsys& x);
// General construction: all choices must be transitions, followed by the
// cubical coreflection.
Tsys cocyl_general(const Tsys& x, std::uint64_t budget = kDefaultBudget);

bool is_cofibration(const TsMap& f);

// Whether some H: cyl(X) -> Y restricts to f and g. Requires cubical
// endpoints.
bool are_homotopic(const TsMap& f, const TsMap& g);

enum class Structure { LdCts, LdRts, BlCts, BlRts };
Structure parse_structure(const std::string& name);  // "ld_cts", "bl-rts", ...

// Cubical endpoints for the Cts structures, regular for the Rts ones.
bool is_weq(const TsMap& f, Structure s);

// Bl structures only: fibrancy is combinatorial fibrancy.
bool is_fibrant(const Tsys& x, Structure s);

enum class Verdict { True, False, Unknown };
// Ld structure: a sufficient condition only (regular and CSA1).
Verdict is_fibrant_ld(const Tsys& x);

// Every commutative square from i to p has a diagonal filler.
bool has_rlp(const TsMap& p, const TsMap& i,
             std::uint64_t budget = kDefaultBudget);
// Every map dom(i) -> x extends along i.
bool injective_wrt(const Tsys& x, const TsMap& i,
                   std::uint64_t budget = kDefaultBudget);

}  // namespace hdts
