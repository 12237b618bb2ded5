#include "hdts/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "hdts/axioms.hpp"
#include "hdts/cats.hpp"
#include "hdts/reflect.hpp"

namespace hdts {

namespace {

void require_cubical(const Tsys& x, const std::string& what) {
  if (!is_cubical(x)) throw PreconditionFailed(what + ": input is not cubical");
}

std::map<std::string, std::vector<int>> actions_by_label(const Tsys& x) {
  std::map<std::string, std::vector<int>> out;
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    out[x.label(static_cast<int>(a))].push_back(static_cast<int>(a));
  return out;
}

// Label-matching action pairs of x, as a name table plus lookup.
struct PairTable {
  std::vector<std::string> names, labels;
  std::map<std::pair<int, int>, int> index;
};

PairTable action_pairs(const Tsys& x) {
  PairTable t;
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [label, acts] : actions_by_label(x))
    for (int a : acts)
      for (int b : acts) {
        t.index[{a, b}] = static_cast<int>(named.size());
        named.emplace_back(x.action_name(a), x.action_name(b));
        t.labels.push_back(label);
      }
  t.names = pair_names(named);
  return t;
}

// Calls f(v) for every word v with v[i] ranging over the label class of
// w[i].
template <class F>
void for_each_relabelling(const Tsys& x,
                          const std::map<std::string, std::vector<int>>& cls,
                          const std::vector<int>& w, F f) {
  std::vector<const std::vector<int>*> choice;
  for (int a : w) choice.push_back(&cls.at(x.label(a)));
  std::vector<std::size_t> pos(w.size(), 0);
  std::vector<int> v(w.size());
  while (true) {
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = (*choice[i])[pos[i]];
    f(v);
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == choice[i]->size()) pos[i++] = 0;
    if (i == pos.size()) return;
  }
}

Tsys cocyl_wts(const Tsys& x) {
  PairTable pt = action_pairs(x);
  auto cls = actions_by_label(x);
  std::set<Transition> ts;
  for (const auto& t : x.transitions()) {
    const std::size_t n = t.word.size();
    for_each_relabelling(x, cls, t.word, [&](const std::vector<int>& v) {
      for (unsigned eps = 0; eps < (1u << n); ++eps) {
        Transition c{t.source, {}, t.target};
        for (std::size_t i = 0; i < n; ++i)
          c.word.push_back((eps >> i) & 1u ? v[i] : t.word[i]);
        if (!x.contains(c)) return;
      }
      Transition p{t.source, {}, t.target};
      for (std::size_t i = 0; i < n; ++i)
        p.word.push_back(pt.index.at({t.word[i], v[i]}));
      ts.insert(std::move(p));
    });
  }
  return Tsys::from_indexed(x.state_names(), pt.names, pt.labels,
                            {ts.begin(), ts.end()});
}

}  // namespace

Cylinder cyl(const Tsys& x) {
  require_cubical(x, "cyl");
  std::vector<std::string> names, labels;
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    for (int e = 0; e < 2; ++e) {
      names.push_back(x.action_name(static_cast<int>(a)) + ":" +
                      std::to_string(e));
      labels.push_back(x.label(static_cast<int>(a)));
    }
  std::vector<Transition> ts;
  for (const auto& t : x.transitions()) {
    const std::size_t n = t.word.size();
    for (unsigned eps = 0; eps < (1u << n); ++eps) {
      Transition c{t.source, {}, t.target};
      for (std::size_t i = 0; i < n; ++i)
        c.word.push_back(2 * t.word[i] + static_cast<int>((eps >> i) & 1u));
      ts.push_back(std::move(c));
    }
  }
  Tsys c = Tsys::from_indexed(x.state_names(), names, labels, ts);
  std::vector<int> id(x.num_states());
  for (std::size_t s = 0; s < id.size(); ++s) id[s] = static_cast<int>(s);
  std::vector<int> g0, g1, sig(c.num_actions());
  for (std::size_t a = 0; a < x.num_actions(); ++a) {
    const std::string& n = x.action_name(static_cast<int>(a));
    g0.push_back(c.action(n + ":0"));
    g1.push_back(c.action(n + ":1"));
    sig[g0.back()] = sig[g1.back()] = static_cast<int>(a);
  }
  return Cylinder{c, TsMap(x, c, id, std::move(g0)),
                  TsMap(x, c, id, std::move(g1)), TsMap(c, x, id, std::move(sig))};
}

namespace {

// Coordinate projections from a system whose actions are named by pt.
std::pair<TsMap, TsMap> projections(const Tsys& x, const Tsys& p,
                                    const PairTable& pt) {
  std::vector<int> id(x.num_states()), e0(p.num_actions()), e1(p.num_actions());
  for (std::size_t s = 0; s < id.size(); ++s) id[s] = static_cast<int>(s);
  for (const auto& [ab, k] : pt.index) {
    auto a = p.find_action(pt.names[k]);
    if (!a) continue;
    e0[*a] = ab.first;
    e1[*a] = ab.second;
  }
  return {TsMap(p, x, id, std::move(e0)), TsMap(p, x, id, std::move(e1))};
}

PathObject cocyl_fast_impl(const Tsys& x) {
  PairTable pt = action_pairs(x);
  auto cls = actions_by_label(x);
  std::set<Transition> ts;
  for (const auto& t : x.transitions()) {
    const std::size_t n = t.word.size();
    for_each_relabelling(x, cls, t.word, [&](const std::vector<int>& v) {
      for (unsigned eps = 0; eps < (1u << n); ++eps) {
        Transition p{t.source, {}, t.target};
        for (std::size_t i = 0; i < n; ++i) {
          bool second = (eps >> i) & 1u;
          p.word.push_back(second ? pt.index.at({v[i], t.word[i]})
                                  : pt.index.at({t.word[i], v[i]}));
        }
        ts.insert(std::move(p));
      }
    });
  }
  Tsys p = Tsys::from_indexed(x.state_names(), pt.names, pt.labels,
                              {ts.begin(), ts.end()});
  auto [e0, e1] = projections(x, p, pt);
  return PathObject{p, e0, e1};
}

PathObject cocyl_general_impl(const Tsys& x, std::uint64_t budget) {
  PairTable pt = action_pairs(x);
  Tsys w = cocyl_wts(x);
  Coreflection c = cts_coreflection(w, budget);
  auto [e0, e1] = projections(x, w, pt);
  return PathObject{c.object, compose(e0, c.counit), compose(e1, c.counit)};
}

}  // namespace

Tsys cocyl_fast(const Tsys& x) {
  require_cubical(x, "cocyl");
  return cocyl_fast_impl(x).object;
}

Tsys cocyl_general(const Tsys& x, std::uint64_t budget) {
  require_cubical(x, "cocyl");
  return cocyl_general_impl(x, budget).object;
}

PathObject cocyl(const Tsys& x, std::uint64_t budget) {
  require_cubical(x, "cocyl");
  return is_combinatorially_fibrant(x) ? cocyl_fast_impl(x)
                                       : cocyl_general_impl(x, budget);
}

bool is_cofibration(const TsMap& f) { return injective_on_actions(f); }

bool are_homotopic(const TsMap& f, const TsMap& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw PreconditionFailed("are_homotopic: maps must share domain and codomain");
  require_cubical(f.domain(), "are_homotopic");
  require_cubical(f.codomain(), "are_homotopic");
  // Both ends of the cylinder are the identity on states, so a homotopy
  // is forced: it must agree with f and g on states and send u:0 to f(u),
  // u:1 to g(u). It exists iff that assignment preserves transitions.
  if (f.state_map() != g.state_map()) return false;
  Cylinder c = cyl(f.domain());
  std::vector<int> acts(c.object.num_actions());
  for (std::size_t a = 0; a < f.domain().num_actions(); ++a) {
    acts[c.gamma0.action(static_cast<int>(a))] = f.action(static_cast<int>(a));
    acts[c.gamma1.action(static_cast<int>(a))] = g.action(static_cast<int>(a));
  }
  for (const auto& t : c.object.transitions()) {
    Transition img{f.state(t.source), {}, f.state(t.target)};
    for (int a : t.word) img.word.push_back(acts[a]);
    if (!f.codomain().contains(img)) return false;
  }
  return true;
}

Structure parse_structure(const std::string& name) {
  if (name == "ld_cts" || name == "ld-cts") return Structure::LdCts;
  if (name == "ld_rts" || name == "ld-rts") return Structure::LdRts;
  if (name == "bl_cts" || name == "bl-cts") return Structure::BlCts;
  if (name == "bl_rts" || name == "bl-rts") return Structure::BlRts;
  throw std::invalid_argument("unknown structure " + name);
}

namespace {

bool rts(Structure s) { return s == Structure::LdRts || s == Structure::BlRts; }

void require_endpoint(const Tsys& x, Structure s, const char* what) {
  if (rts(s) ? !is_regular(x) : !is_cubical(x))
    throw PreconditionFailed(std::string(what) + ": input is not " +
                             (rts(s) ? "regular" : "cubical"));
}

ReflectorKind reflector_for(Structure s) {
  switch (s) {
    case Structure::LdCts: return ReflectorKind::Csa1Cts;
    case Structure::LdRts: return ReflectorKind::Csa1Rts;
    case Structure::BlCts: return ReflectorKind::LsCts;
    case Structure::BlRts: return ReflectorKind::LsRts;
  }
  throw std::logic_error("unknown structure");
}

// Candidates in the fibres of p over each element of a map b.
void fibre_candidates(const TsMap& p, const std::vector<int>& over_states,
                      const std::vector<int>& over_actions,
                      HomSearchOptions& opt) {
  std::vector<std::vector<int>> sf(p.codomain().num_states()),
      af(p.codomain().num_actions());
  for (std::size_t s = 0; s < p.domain().num_states(); ++s)
    sf[p.state(static_cast<int>(s))].push_back(static_cast<int>(s));
  for (std::size_t a = 0; a < p.domain().num_actions(); ++a)
    af[p.action(static_cast<int>(a))].push_back(static_cast<int>(a));
  opt.state_candidates.clear();
  opt.action_candidates.clear();
  for (int b : over_states) opt.state_candidates.emplace_back(sf[b]);
  for (int b : over_actions) opt.action_candidates.emplace_back(af[b]);
}

// Restricts candidates of the codomain elements of i to the images under a.
void pin_along(const TsMap& i, const std::vector<int>& as,
               const std::vector<int>& aa, HomSearchOptions& opt) {
  const std::size_t ns = i.codomain().num_states();
  const std::size_t na = i.codomain().num_actions();
  if (opt.state_candidates.empty()) opt.state_candidates.resize(ns);
  if (opt.action_candidates.empty()) opt.action_candidates.resize(na);
  auto pin = [](std::optional<std::vector<int>>& slot, int v) {
    if (!slot) {
      slot = std::vector<int>{v};
    } else {
      bool has = std::find(slot->begin(), slot->end(), v) != slot->end();
      slot = has ? std::vector<int>{v} : std::vector<int>{};
    }
  };
  for (std::size_t s = 0; s < as.size(); ++s)
    pin(opt.state_candidates[i.state(static_cast<int>(s))], as[s]);
  for (std::size_t a = 0; a < aa.size(); ++a)
    pin(opt.action_candidates[i.action(static_cast<int>(a))], aa[a]);
}

}  // namespace

bool is_weq(const TsMap& f, Structure s) {
  require_endpoint(f.domain(), s, "is_weq");
  require_endpoint(f.codomain(), s, "is_weq");
  return is_iso_map(induced_map(reflector_for(s), f));
}

bool is_fibrant(const Tsys& x, Structure s) {
  if (s == Structure::LdCts || s == Structure::LdRts)
    throw std::invalid_argument(
        "fibrancy for the ld structures is only semi-decided; use is_fibrant_ld");
  require_endpoint(x, s, "is_fibrant");
  return is_combinatorially_fibrant(x);
}

Verdict is_fibrant_ld(const Tsys& x) {
  AxiomReport r = classify(x, 0);
  return r.regular() && r.csa1.pass ? Verdict::True : Verdict::Unknown;
}

bool has_rlp(const TsMap& p, const TsMap& i, std::uint64_t budget) {
  HomSearchOptions base;
  base.budget = budget;
  bool all = true;
  for_each_hom(i.codomain(), p.codomain(), base,
               [&](const std::vector<int>& bs, const std::vector<int>& ba) {
                 // Tops a with p o a = b o i.
                 std::vector<int> bis, bia;
                 for (int s : i.state_map()) bis.push_back(bs[s]);
                 for (int a : i.action_map()) bia.push_back(ba[a]);
                 HomSearchOptions top = base;
                 fibre_candidates(p, bis, bia, top);
                 for_each_hom(
                     i.domain(), p.domain(), top,
                     [&](const std::vector<int>& as, const std::vector<int>& aa) {
                       HomSearchOptions lift = base;
                       fibre_candidates(p, bs, ba, lift);
                       pin_along(i, as, aa, lift);
                       if (!find_hom(i.codomain(), p.domain(), lift)) all = false;
                       return all;
                     });
                 return all;
               });
  return all;
}

bool injective_wrt(const Tsys& x, const TsMap& i, std::uint64_t budget) {
  HomSearchOptions base;
  base.budget = budget;
  bool all = true;
  for_each_hom(i.domain(), x, base,
               [&](const std::vector<int>& as, const std::vector<int>& aa) {
                 HomSearchOptions ext = base;
                 pin_along(i, as, aa, ext);
                 if (!find_hom(i.codomain(), x, ext)) all = false;
                 return all;
               });
  return all;
}

}  // namespace hdts
