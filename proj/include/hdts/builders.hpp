// Standard systems, the generating maps, and worked examples.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hdts/cats.hpp"
#include "hdts/core.hpp"

namespace hdts {

// Cube state names are bitstrings ("010"); the 0-cube's single state is
// "_". Cube actions are "<label>.<index>", indices from 1.
std::string cube_state_name(const std::vector<int>& bits);
std::string cube_action_name(const std::string& label, std::size_t index);

Tsys cube(const std::vector<std::string>& labels);
// Only the full-length transitions between the bottom and top corners.
Tsys pure_transition(const std::vector<std::string>& labels);
// The cube without its top-dimensional transitions. Needs n >= 1.
Tsys boundary(const std::vector<std::string>& labels);
// States 1..4, one action x, transitions (1,x,2) and (3,x,4).
Tsys double_transition(const std::string& label);
// No states, one action.
Tsys bare_action(const std::string& label);
// States 1..4; actions x1, x2, x; transitions (1,x1,2), (1,x,2),
// (3,x2,4), (3,x,4).
Tsys zx(const std::string& label);

// Generating maps: p, p_cof, q_of_Z, c0, c1, gamma0, gamma1, sigma, theta
// (one label each), eta and boundary_incl (n >= 1 labels), pure_incl
// (any number). Throws ArityMismatch.
TsMap generator(const std::string& name, const std::vector<std::string>& labels);
const std::vector<std::string>& generator_names();

// Worked examples.
Tsys intro_example(int n);
Tsys csa1diff();
Tsys wbar2(const std::string& label);
TsMap wbar2_map(const std::string& label);  // wbar2 -> cube([x,x])
Tsys wbar3(const std::string& label);
TsMap wbar3_attach(const std::string& label);  // C1 + C1 -> wbar3
// Pushout of p along the attaching map; returns the square.
Pushout wbar3_pushout(const std::string& label, PushoutMode mode);

using Example = std::variant<Tsys, TsMap>;
// intro N | csa1diff | wbar2 X | wbar2_map X | wbar3 X | wbar3_attach X |
// wbar3_pushout X [cts|rts] (the leg out of wbar3).
Example example(const std::string& name, const std::vector<std::string>& params);
const std::vector<std::string>& example_names();

}  // namespace hdts
