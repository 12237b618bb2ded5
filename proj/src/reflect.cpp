#include "hdts/reflect.hpp"

#include <map>
#include <stdexcept>

#include "hdts/axioms.hpp"
#include "hdts/closure.hpp"
#include "hdts/union_find.hpp"
#include "split_index.hpp"

namespace hdts {

ReflectorKind parse_reflector_kind(const std::string& name) {
  if (name == "csa2") return ReflectorKind::Csa2;
  if (name == "csa1_cts" || name == "csa1-cts") return ReflectorKind::Csa1Cts;
  if (name == "csa1_rts" || name == "csa1-rts") return ReflectorKind::Csa1Rts;
  if (name == "ls_cts" || name == "ls-cts") return ReflectorKind::LsCts;
  if (name == "ls_rts" || name == "ls-rts") return ReflectorKind::LsRts;
  throw std::invalid_argument("unknown reflector " + name);
}

std::string to_string(ReflectorKind kind) {
  switch (kind) {
    case ReflectorKind::Csa2: return "csa2";
    case ReflectorKind::Csa1Cts: return "csa1_cts";
    case ReflectorKind::Csa1Rts: return "csa1_rts";
    case ReflectorKind::LsCts: return "ls_cts";
    case ReflectorKind::LsRts: return "ls_rts";
  }
  return "?";
}

namespace {

void require_cubical(const Tsys& x, const char* what) {
  if (!is_cubical(x))
    throw PreconditionFailed(std::string(what) + ": input is not cubical");
}

void require_regular(const Tsys& x, const char* what) {
  if (!is_regular(x))
    throw PreconditionFailed(std::string(what) + ": input is not regular");
}

// One round of CSA1 merges. Returns false when CSA1 already holds.
bool csa1_round(Reflection& r) {
  const Tsys& x = r.object;
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (const auto& t : x.transitions())
    if (t.word.size() == 1) parallel[{t.source, t.target}].push_back(t.word[0]);
  DisjointSets actions(x.num_actions());
  bool any = false;
  for (const auto& [ends, acts] : parallel)
    for (std::size_t i = 0; i < acts.size(); ++i)
      for (std::size_t j = i + 1; j < acts.size(); ++j)
        if (x.label(acts[i]) == x.label(acts[j]) &&
            actions.unite(acts[i], acts[j])) {
          r.trace.push_back({MergeEvent::Kind::Action, x.action_name(acts[i]),
                             x.action_name(acts[j])});
          any = true;
        }
  if (!any) return false;
  DisjointSets states(x.num_states());
  Quotient q = quotient(x, states, actions);
  r.unit = compose(q.map, r.unit);
  r.object = q.object;
  return true;
}

Reflection then(Reflection first, const Reflection& second) {
  first.unit = compose(second.unit, first.unit);
  first.object = second.object;
  first.trace.insert(first.trace.end(), second.trace.begin(),
                     second.trace.end());
  return first;
}

}  // namespace

Reflection csa2_reflect(const Tsys& x) {
  require_cubical(x, "csa2");
  Reflection r{x, TsMap::identity(x), {}};
  while (true) {
    const Tsys& cur = r.object;
    detail::SplitIndex idx(cur);
    DisjointSets states(cur.num_states());
    bool any = false;
    for (const auto& t : cur.transitions())
      for (std::size_t p = 1; p < t.word.size(); ++p) {
        auto s = idx.splits(t, p);
        for (std::size_t i = 1; i < s.size(); ++i)
          if (states.unite(s[0], s[i])) {
            r.trace.push_back({MergeEvent::Kind::State, cur.state_name(s[0]),
                               cur.state_name(s[i])});
            any = true;
          }
      }
    if (!any) break;
    DisjointSets actions(cur.num_actions());
    Quotient q = quotient(cur, states, actions);
    r.unit = compose(q.map, r.unit);
    r.object = q.object;
  }
  return r;
}

Reflection csa1_reflect_cts(const Tsys& x) {
  require_cubical(x, "csa1_cts");
  Reflection r{x, TsMap::identity(x), {}};
  while (csa1_round(r)) {
  }
  return r;
}

Reflection csa1_reflect_rts(const Tsys& x) {
  require_regular(x, "csa1_rts");
  Reflection r{x, TsMap::identity(x), {}};
  while (csa1_round(r)) {
    Reflection step = csa2_reflect(r.object);
    r = then(std::move(r), step);
  }
  return r;
}

Reflection ls_reflect_cts(const Tsys& x) {
  require_cubical(x, "ls_cts");
  Reflection r{x, TsMap::identity(x), {}};
  std::map<std::string, int> first;
  DisjointSets actions(x.num_actions());
  bool any = false;
  for (std::size_t a = 0; a < x.num_actions(); ++a) {
    auto [it, fresh] = first.emplace(x.label(static_cast<int>(a)),
                                     static_cast<int>(a));
    if (!fresh) {
      actions.unite(it->second, static_cast<int>(a));
      r.trace.push_back({MergeEvent::Kind::Action,
                         x.action_name(it->second),
                         x.action_name(static_cast<int>(a))});
      any = true;
    }
  }
  if (!any) return r;
  DisjointSets states(x.num_states());
  Quotient q = quotient(x, states, actions);
  r.unit = q.map;
  r.object = q.object;
  return r;
}

Reflection ls_reflect_rts(const Tsys& x) {
  require_regular(x, "ls_rts");
  Reflection r = ls_reflect_cts(x);
  Reflection step = csa2_reflect(r.object);
  return then(std::move(r), step);
}

Reflection reflect(ReflectorKind kind, const Tsys& x) {
  switch (kind) {
    case ReflectorKind::Csa2: return csa2_reflect(x);
    case ReflectorKind::Csa1Cts: return csa1_reflect_cts(x);
    case ReflectorKind::Csa1Rts: return csa1_reflect_rts(x);
    case ReflectorKind::LsCts: return ls_reflect_cts(x);
    case ReflectorKind::LsRts: return ls_reflect_rts(x);
  }
  throw std::logic_error("unknown reflector kind");
}

TsMap induced_map(ReflectorKind kind, const TsMap& f) {
  Reflection rd = reflect(kind, f.domain());
  Reflection rc = reflect(kind, f.codomain());
  try {
    return factor_through(rd.unit, compose(rc.unit, f));
  } catch (const InvalidMap& e) {
    throw std::logic_error(std::string("induced map is not well defined: ") +
                           e.what());
  }
}

}  // namespace hdts
