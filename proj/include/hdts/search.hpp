// Enumeration of maps between systems by backtracking.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct HomSearchOptions {
  // Search nodes allowed before SizeLimitExceeded is thrown.
  std::uint64_t budget = kDefaultBudget;
  // Optional per-element candidate lists (indices into the codomain). An
  // empty outer vector means unconstrained; an empty inner vector means the
  // element has no admissible image.
  std::vector<std::optional<std::vector<StateIndex>>> state_candidates;
  std::vector<std::optional<std::vector<ActionIndex>>> action_candidates;
  bool injective = false;
};

// Calls `visit(state_map, action_map)` for every map A -> X satisfying the
// options, in a deterministic order. Stops early when `visit` returns false.
void for_each_hom(
    const Tsys& a, const Tsys& x, const HomSearchOptions& options,
    const std::function<bool(const std::vector<StateIndex>&,
                             const std::vector<ActionIndex>&)>& visit);

// All maps, sorted lexicographically by (state images, action images).
std::vector<TsMap> hom_search(const Tsys& a, const Tsys& x,
                              const HomSearchOptions& options = {});
std::uint64_t hom_count(const Tsys& a, const Tsys& x,
                        const HomSearchOptions& options = {});
std::optional<TsMap> find_hom(const Tsys& a, const Tsys& x,
                              const HomSearchOptions& options = {});

std::optional<TsMap> iso_search(const Tsys& x, const Tsys& y,
                                std::uint64_t budget = kDefaultBudget);
bool is_isomorphic(const Tsys& x, const Tsys& y,
                   std::uint64_t budget = kDefaultBudget);

// Bijective on states, actions and transitions.
bool is_iso_map(const TsMap& f);

}  // namespace hdts
