#include "hdts/cats.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "hdts/axioms.hpp"
#include "hdts/builders.hpp"
#include "hdts/closure.hpp"
#include "hdts/reflect.hpp"
#include "hdts/union_find.hpp"

namespace hdts {

std::vector<std::string> pair_names(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::string> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) out.push_back(a + ":" + b);
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() == out.size()) return out;
  out.clear();
  for (const auto& [a, b] : pairs)
    out.push_back(std::to_string(a.size()) + ":" + a + ":" + b);
  return out;
}

Coproduct coproduct(const std::vector<Tsys>& parts) {
  std::vector<std::string> snames, anames, alabels;
  std::vector<Transition> ts;
  std::vector<std::pair<int, int>> offsets;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Tsys& p = parts[k];
    const std::string tag = std::to_string(k) + ".";
    int so = static_cast<int>(snames.size());
    int ao = static_cast<int>(anames.size());
    offsets.emplace_back(so, ao);
    for (const auto& n : p.state_names()) snames.push_back(tag + n);
    for (std::size_t a = 0; a < p.num_actions(); ++a) {
      anames.push_back(tag + p.action_name(static_cast<int>(a)));
      alabels.push_back(p.label(static_cast<int>(a)));
    }
    for (const auto& t : p.transitions()) {
      Transition u{t.source + so, {}, t.target + so};
      for (int a : t.word) u.word.push_back(a + ao);
      ts.push_back(std::move(u));
    }
  }
  Tsys obj = Tsys::from_indexed(snames, anames, alabels,
                                saturate_transitions(std::move(ts)));
  std::vector<TsMap> inj;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Tsys& p = parts[k];
    const std::string tag = std::to_string(k) + ".";
    std::vector<int> s, a;
    for (const auto& n : p.state_names()) s.push_back(obj.state(tag + n));
    for (const auto& n : p.action_names()) a.push_back(obj.action(tag + n));
    inj.emplace_back(p, obj, std::move(s), std::move(a));
  }
  return Coproduct{obj, std::move(inj)};
}

Pushout pushout(const TsMap& f, const TsMap& g, PushoutMode mode) {
  if (!(f.domain() == g.domain()))
    throw PreconditionFailed("pushout: maps have different domains");
  Coproduct cp = coproduct({f.codomain(), g.codomain()});
  const TsMap& ib = cp.injections[0];
  const TsMap& ic = cp.injections[1];
  DisjointSets states(cp.object.num_states());
  DisjointSets actions(cp.object.num_actions());
  const Tsys& a = f.domain();
  for (std::size_t s = 0; s < a.num_states(); ++s)
    states.unite(ib.state(f.state(static_cast<int>(s))),
                 ic.state(g.state(static_cast<int>(s))));
  for (std::size_t x = 0; x < a.num_actions(); ++x)
    actions.unite(ib.action(f.action(static_cast<int>(x))),
                  ic.action(g.action(static_cast<int>(x))));
  Quotient q = quotient(cp.object, states, actions);
  Pushout out{q.object, compose(q.map, ib), compose(q.map, ic)};
  if (mode == PushoutMode::Rts) {
    Reflection r = csa2_reflect(out.object);
    out = Pushout{r.object, compose(r.unit, out.leg_b),
                  compose(r.unit, out.leg_c)};
  }
  return out;
}

Product product(const Tsys& x, const Tsys& y) {
  if (!is_cubical(x) || !is_cubical(y))
    throw PreconditionFailed("product: inputs must be cubical");
  const int ny = static_cast<int>(y.num_states());
  std::vector<std::pair<std::string, std::string>> sp, ap;
  for (const auto& a : x.state_names())
    for (const auto& b : y.state_names()) sp.emplace_back(a, b);
  std::vector<std::pair<int, int>> apairs;
  std::vector<std::string> alabels;
  std::map<std::pair<int, int>, int> apos;
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    for (std::size_t b = 0; b < y.num_actions(); ++b)
      if (x.label(static_cast<int>(a)) == y.label(static_cast<int>(b))) {
        apos[{static_cast<int>(a), static_cast<int>(b)}] =
            static_cast<int>(apairs.size());
        apairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        ap.emplace_back(x.action_name(static_cast<int>(a)),
                        y.action_name(static_cast<int>(b)));
        alabels.push_back(x.label(static_cast<int>(a)));
      }
  std::map<std::size_t, std::vector<const Transition*>> ybylen;
  for (const auto& t : y.transitions()) ybylen[t.word.size()].push_back(&t);
  std::vector<Transition> ts;
  for (const auto& t : x.transitions())
    for (const Transition* u : ybylen[t.word.size()]) {
      Transition p{t.source * ny + u->source, {}, t.target * ny + u->target};
      bool ok = true;
      for (std::size_t i = 0; ok && i < t.word.size(); ++i) {
        auto it = apos.find({t.word[i], u->word[i]});
        ok = it != apos.end();
        if (ok) p.word.push_back(it->second);
      }
      if (ok) ts.push_back(std::move(p));
    }
  auto snames = pair_names(sp);
  auto anames = pair_names(ap);
  Tsys obj = Tsys::from_indexed(snames, anames, alabels, ts);
  std::vector<int> s1, a1, s2, a2;
  s1.resize(obj.num_states());
  s2.resize(obj.num_states());
  for (std::size_t k = 0; k < snames.size(); ++k) {
    int idx = obj.state(snames[k]);
    s1[idx] = static_cast<int>(k) / ny;
    s2[idx] = static_cast<int>(k) % ny;
  }
  a1.resize(obj.num_actions());
  a2.resize(obj.num_actions());
  for (std::size_t k = 0; k < anames.size(); ++k) {
    int idx = obj.action(anames[k]);
    a1[idx] = apairs[k].first;
    a2[idx] = apairs[k].second;
  }
  return Product{obj, TsMap(obj, x, std::move(s1), std::move(a1)),
                 TsMap(obj, y, std::move(s2), std::move(a2))};
}

namespace {

// Names for classes that map to named elements of the input: the input's
// name when the class is alone over it, otherwise "<name>.<k>".
std::vector<std::string> class_names(const std::vector<int>& image,
                                     const std::vector<std::string>& names) {
  std::map<int, int> count, seen;
  for (int i : image) ++count[i];
  std::vector<std::string> out;
  for (int i : image) {
    if (count[i] == 1)
      out.push_back(names[i]);
    else
      out.push_back(names[i] + "." + std::to_string(++seen[i]));
  }
  std::set<std::string> used;
  for (auto& n : out) {
    while (used.count(n)) n += ".1";
    used.insert(n);
  }
  return out;
}

void label_multisets(const std::vector<std::string>& labels, std::size_t len,
                     std::size_t from, std::vector<std::string>& cur,
                     std::vector<std::vector<std::string>>& out) {
  out.push_back(cur);
  if (cur.size() == len) return;
  for (std::size_t i = from; i < labels.size(); ++i) {
    cur.push_back(labels[i]);
    label_multisets(labels, len, i, cur, out);
    cur.pop_back();
  }
}

std::vector<Tsys> cube_shapes(const Tsys& x) {
  std::vector<std::vector<std::string>> words;
  std::vector<std::string> cur;
  label_multisets(x.labels(), x.max_dimension(), 0, cur, words);
  std::vector<Tsys> out;
  for (const auto& w : words) out.push_back(cube(w));
  return out;
}

}  // namespace

Coreflection shape_colimit(const Tsys& x, const std::vector<Tsys>& shapes,
                           std::uint64_t budget) {
  struct Obj {
    int shape;
    std::vector<int> s, a;
    int s_off, a_off;
  };
  std::vector<Obj> objs;
  std::vector<std::map<std::pair<std::vector<int>, std::vector<int>>, int>>
      index(shapes.size());
  std::vector<std::vector<int>> by_shape(shapes.size());
  HomSearchOptions opt;
  opt.budget = budget;
  int s_total = 0, a_total = 0;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    for (const auto& m : hom_search(shapes[k], x, opt)) {
      int id = static_cast<int>(objs.size());
      objs.push_back(Obj{static_cast<int>(k), m.state_map(), m.action_map(),
                         s_total, a_total});
      s_total += static_cast<int>(m.state_map().size());
      a_total += static_cast<int>(m.action_map().size());
      index[k][{m.state_map(), m.action_map()}] = id;
      by_shape[k].push_back(id);
    }
  }
  DisjointSets states(s_total), actions(a_total);
  // Every morphism into an object o is h: S -> shape(o) with source o∘h.
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    for (std::size_t k = 0; k < shapes.size(); ++k) {
      if (by_shape[k].empty()) continue;
      auto homs = hom_search(shapes[j], shapes[k], opt);
      for (const auto& h : homs) {
        for (int o : by_shape[k]) {
          const Obj& tgt = objs[o];
          std::vector<int> s(h.state_map().size()), a(h.action_map().size());
          for (std::size_t i = 0; i < s.size(); ++i) s[i] = tgt.s[h.state(i)];
          for (std::size_t i = 0; i < a.size(); ++i) a[i] = tgt.a[h.action(i)];
          auto it = index[j].find({s, a});
          if (it == index[j].end())
            throw std::logic_error("shape colimit: composite object missing");
          const Obj& src = objs[it->second];
          for (std::size_t i = 0; i < s.size(); ++i)
            states.unite(src.s_off + static_cast<int>(i),
                         tgt.s_off + h.state(i));
          for (std::size_t i = 0; i < a.size(); ++i)
            actions.unite(src.a_off + static_cast<int>(i),
                          tgt.a_off + h.action(i));
        }
      }
    }
  }
  // Number the classes in order of first appearance.
  std::vector<int> s_class(s_total, -1), a_class(a_total, -1);
  std::vector<int> s_image, a_image;
  std::unordered_map<int, int> s_root, a_root;
  for (const Obj& o : objs) {
    for (std::size_t i = 0; i < o.s.size(); ++i) {
      int e = o.s_off + static_cast<int>(i);
      auto [it, fresh] =
          s_root.emplace(states.find(e), static_cast<int>(s_image.size()));
      if (fresh) s_image.push_back(o.s[i]);
      s_class[e] = it->second;
    }
    for (std::size_t i = 0; i < o.a.size(); ++i) {
      int e = o.a_off + static_cast<int>(i);
      auto [it, fresh] =
          a_root.emplace(actions.find(e), static_cast<int>(a_image.size()));
      if (fresh) a_image.push_back(o.a[i]);
      a_class[e] = it->second;
    }
  }
  std::vector<Transition> ts;
  for (const Obj& o : objs)
    for (const auto& t : shapes[o.shape].transitions()) {
      Transition u{s_class[o.s_off + t.source], {},
                   s_class[o.s_off + t.target]};
      for (int a : t.word) u.word.push_back(a_class[o.a_off + a]);
      ts.push_back(std::move(u));
    }
  auto snames = class_names(s_image, x.state_names());
  auto anames = class_names(a_image, x.action_names());
  std::vector<std::string> alabels;
  for (int a : a_image) alabels.push_back(x.label(a));
  Tsys obj = Tsys::from_indexed(snames, anames, alabels,
                                saturate_transitions(std::move(ts)));
  std::vector<int> cs(obj.num_states()), ca(obj.num_actions());
  for (std::size_t k = 0; k < snames.size(); ++k)
    cs[obj.state(snames[k])] = s_image[k];
  for (std::size_t k = 0; k < anames.size(); ++k)
    ca[obj.action(anames[k])] = a_image[k];
  return Coreflection{obj, TsMap(obj, x, std::move(cs), std::move(ca))};
}

Coreflection cubification(const Tsys& x, std::uint64_t budget) {
  return shape_colimit(x, cube_shapes(x), budget);
}

Coreflection cts_coreflection(const Tsys& x, std::uint64_t budget) {
  auto shapes = cube_shapes(x);
  for (const auto& l : x.labels()) shapes.push_back(double_transition(l));
  return shape_colimit(x, shapes, budget);
}

Coreflection intermediate_saturation(const Tsys& x, std::uint64_t budget) {
  auto shapes = cube_shapes(x);
  for (const auto& l : x.labels()) shapes.push_back(bare_action(l));
  return shape_colimit(x, shapes, budget);
}

}  // namespace hdts
