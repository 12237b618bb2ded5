#include "hdts/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "hdts/closure.hpp"
#include "hdts/homotopy.hpp"

namespace hdts {

std::string cube_state_name(const std::vector<int>& bits) {
  if (bits.empty()) return "_";
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

std::string cube_action_name(const std::string& label, std::size_t index) {
  return label + "." + std::to_string(index);
}

namespace {

std::vector<int> bits_of(unsigned mask, std::size_t n) {
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1u;
  return b;
}

// States, actions and all cube transitions of dimension in [lo, hi].
Tsys cube_part(const std::vector<std::string>& labels, std::size_t lo,
               std::size_t hi, bool corners_only) {
  const std::size_t n = labels.size();
  if (n > 16) throw PreconditionFailed("cube dimension too large");
  const unsigned full = (1u << n) - 1;
  std::vector<std::string> states, anames;
  for (unsigned m = 0; m <= full; ++m) {
    if (corners_only && m != 0 && m != full) continue;
    states.push_back(cube_state_name(bits_of(m, n)));
  }
  for (std::size_t i = 0; i < n; ++i)
    anames.push_back(cube_action_name(labels[i], i + 1));
  auto state_of = [&](unsigned m) {
    if (!corners_only) return static_cast<int>(m);
    return m == 0 ? 0 : static_cast<int>(states.size()) - 1;
  };
  std::vector<Transition> ts;
  for (unsigned from = 0; from <= full; ++from) {
    unsigned zeros = full & ~from;
    // Nonempty subsets d of the zero coordinates.
    for (unsigned d = zeros; d; d = (d - 1) & zeros) {
      std::vector<int> word;
      for (std::size_t i = 0; i < n; ++i)
        if (d & (1u << i)) word.push_back(static_cast<int>(i));
      if (word.size() < lo || word.size() > hi) continue;
      if (corners_only && (from != 0 || (from | d) != full)) continue;
      do {
        ts.push_back(Transition{state_of(from), word, state_of(from | d)});
      } while (std::next_permutation(word.begin(), word.end()));
    }
  }
  return Tsys::from_indexed(states, anames, labels, ts);
}

void require_arity(const std::string& name, const std::vector<std::string>& l,
                   std::size_t min, std::size_t max) {
  if (l.size() < min || l.size() > max)
    throw ArityMismatch("generator " + name + " expects " +
                        (min == max ? std::to_string(min)
                                    : "at least " + std::to_string(min)) +
                        " label(s), got " + std::to_string(l.size()));
}

// The 2-state discrete system on the corners of an n-cube, n >= 1.
Tsys corners(std::size_t n) {
  return Tsys::from_indexed({std::string(n, '0'), std::string(n, '1')}, {}, {},
                            {});
}

TsMap corner_inclusion(const Tsys& target, std::size_t n) {
  Tsys e = corners(n);
  return TsMap::from_names(e, target,
                           {{std::string(n, '0'), std::string(n, '0')},
                            {std::string(n, '1'), std::string(n, '1')}},
                           {});
}

TsMap inclusion(const Tsys& sub, const Tsys& whole) {
  std::vector<std::pair<std::string, std::string>> s, a;
  for (const auto& n : sub.state_names()) s.emplace_back(n, n);
  for (const auto& n : sub.action_names()) a.emplace_back(n, n);
  return TsMap::from_names(sub, whole, s, a);
}

}  // namespace

Tsys cube(const std::vector<std::string>& labels) {
  return cube_part(labels, 1, labels.size(), false);
}

Tsys pure_transition(const std::vector<std::string>& labels) {
  if (labels.empty()) return cube(labels);
  return cube_part(labels, labels.size(), labels.size(), true);
}

Tsys boundary(const std::vector<std::string>& labels) {
  if (labels.empty())
    throw ArityMismatch("boundary needs at least one label");
  return cube_part(labels, 1, labels.size() - 1, false);
}

Tsys double_transition(const std::string& x) {
  TsysBuilder b;
  b.action(x, x);
  b.transition("1", {x}, "2");
  b.transition("3", {x}, "4");
  return b.build();
}

Tsys bare_action(const std::string& x) {
  return Tsys::from_indexed({}, {x}, {x}, {});
}

Tsys zx(const std::string& x) {
  TsysBuilder b;
  b.action(x + "1", x);
  b.action(x + "2", x);
  b.action(x, x);
  b.transition("1", {x + "1"}, "2");
  b.transition("1", {x}, "2");
  b.transition("3", {x + "2"}, "4");
  b.transition("3", {x}, "4");
  return b.build();
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {
      "p",     "p_cof", "q_of_Z", "c0",  "c1",           "gamma0",
      "gamma1", "sigma", "theta",  "eta", "boundary_incl", "pure_incl"};
  return names;
}

TsMap generator(const std::string& name,
                const std::vector<std::string>& labels) {
  if (name == "pure_incl") return inclusion(pure_transition(labels), cube(labels));
  if (name == "boundary_incl") {
    require_arity(name, labels, 1, SIZE_MAX);
    return inclusion(boundary(labels), cube(labels));
  }
  if (name == "eta") {
    require_arity(name, labels, 1, SIZE_MAX);
    const std::size_t n = labels.size();
    Tsys c = cube(labels);
    Tsys d = boundary(labels);
    TsMap to_c = corner_inclusion(c, n);
    Pushout dom = pushout(corner_inclusion(d, n), to_c, PushoutMode::Cts);
    Pushout cod = pushout(to_c, to_c, PushoutMode::Cts);
    return copair({dom.leg_b, dom.leg_c},
                  {compose(cod.leg_b, inclusion(d, c)), cod.leg_c});
  }
  if (std::find(generator_names().begin(), generator_names().end(), name) ==
      generator_names().end())
    throw std::invalid_argument("unknown generator " + name);
  require_arity(name, labels, 1, 1);
  const std::string& x = labels[0];
  const std::string u = cube_action_name(x, 1);
  Tsys c1 = cube({x});
  if (name == "gamma0" || name == "gamma1" || name == "sigma") {
    Cylinder cy = cyl(c1);
    return name == "gamma0" ? cy.gamma0 : name == "gamma1" ? cy.gamma1 : cy.sigma;
  }
  Tsys dbl = double_transition(x);
  if (name == "c0")
    return TsMap::from_names(c1, dbl, {{"0", "1"}, {"1", "2"}}, {{u, x}});
  if (name == "c1")
    return TsMap::from_names(c1, dbl, {{"0", "3"}, {"1", "4"}}, {{u, x}});
  Tsys z = zx(x);
  if (name == "q_of_Z")
    return TsMap::from_names(
        z, dbl, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}},
        {{x + "1", x}, {x + "2", x}, {x, x}});
  Coproduct two = coproduct({c1, c1});
  const std::vector<std::pair<std::string, std::string>> corners4 = {
      {"0.0", "1"}, {"0.1", "2"}, {"1.0", "3"}, {"1.1", "4"}};
  if (name == "p")
    return TsMap::from_names(two.object, dbl, corners4,
                             {{"0." + u, x}, {"1." + u, x}});
  if (name == "p_cof")
    return TsMap::from_names(two.object, z, corners4,
                             {{"0." + u, x + "1"}, {"1." + u, x + "2"}});
  // theta: C1 + C1 -> cyl(C1) glued to the double transition along gamma0
  // and c0.
  Cylinder cy = cyl(c1);
  TsMap c0 = generator("c0", labels);
  TsMap c1map = generator("c1", labels);
  Pushout po = pushout(cy.gamma0, c0, PushoutMode::Cts);
  return copair(two.injections,
                {compose(po.leg_b, cy.gamma1), compose(po.leg_c, c1map)});
}

// ---- examples -------------------------------------------------------------

Tsys intro_example(int n) {
  if (n < 1) throw PreconditionFailed("intro needs n >= 1");
  TsysBuilder b;
  b.action("u", "x");
  b.action("v", "y");
  b.transition("I", {"u", "v"}, "F");
  b.transition("I", {"v", "u"}, "F");
  b.transition("I", {"u"}, "a");
  b.transition("a", {"v"}, "F");
  for (int i = 1; i <= n; ++i) {
    const std::string bi = "b" + std::to_string(i);
    b.transition("I", {"v"}, bi);
    b.transition(bi, {"u"}, "F");
  }
  return b.build();
}

Tsys csa1diff() {
  TsysBuilder b;
  for (const char* a : {"u1", "u2", "u1_p", "u2_p", "v", "v_p"}) b.action(a, "x");
  for (const auto& [u1, u2, chi, nu] :
       {std::tuple<std::string, std::string, std::string, std::string>{
            "u1", "u2", "chi", "nu"},
        {"u1_p", "u2_p", "chi_p", "nu_p"}}) {
    b.transition("alpha", {u1, u2}, "beta");
    b.transition("alpha", {u2, u1}, "beta");
    b.transition("alpha", {u1}, chi);
    b.transition(chi, {u2}, "beta");
    b.transition("alpha", {u2}, nu);
    b.transition(nu, {u1}, "beta");
  }
  b.transition("gamma", {"v"}, "chi");
  b.transition("gamma", {"v_p"}, "chi_p");
  b.transition("U1", {"u1"}, "V1");
  b.transition("U1", {"u1_p"}, "V1");
  b.transition("U2", {"u2"}, "V2");
  b.transition("U2", {"u2_p"}, "V2");
  return b.build();
}

namespace {

// Two copies of the n-cube on labels x..x sharing their bottom and top
// corners; coordinate `split` is renamed per copy, the others are shared.
struct Doubled {
  SetProfile profile;
  std::vector<ConeLeg> cone;
};

Doubled doubled_cube(const std::string& x, std::size_t n, std::size_t split,
                     const std::vector<std::string>& shared_actions,
                     const std::string& minus, const std::string& plus) {
  Tsys c = cube(std::vector<std::string>(n, x));
  Doubled d;
  d.profile.states = {"I", "F"};
  for (const auto& a : shared_actions)
    if (!a.empty()) d.profile.actions.emplace_back(a, x);
  d.profile.actions.emplace_back(minus, x);
  d.profile.actions.emplace_back(plus, x);
  const std::string zero(n, '0'), one(n, '1');
  for (const auto& [sign, act] : {std::pair<std::string, std::string>{"-", minus},
                                  {"+", plus}}) {
    ConeLeg leg{c, {}, {}};
    for (const auto& s : c.state_names()) {
      std::string img = (s == zero) ? "I" : (s == one) ? "F" : s + sign;
      if (s != zero && s != one &&
          std::find(d.profile.states.begin(), d.profile.states.end(), img) ==
              d.profile.states.end())
        d.profile.states.push_back(img);
      leg.state_images.push_back(img);
    }
    leg.action_images.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      leg.action_images[c.action(cube_action_name(x, i + 1))] =
          i == split ? act : shared_actions[i];
    d.cone.push_back(std::move(leg));
  }
  return d;
}

}  // namespace

Tsys wbar2(const std::string& x) {
  Doubled d = doubled_cube(x, 2, 1, {"u", ""}, "vm", "vp");
  return final_lift(d.profile, d.cone);
}

TsMap wbar2_map(const std::string& x) {
  Tsys w = wbar2(x);
  Tsys c = cube({x, x});
  std::vector<std::pair<std::string, std::string>> s = {{"I", "00"},
                                                        {"F", "11"}};
  for (const char* e : {"10", "01"})
    for (const char* sign : {"-", "+"}) s.emplace_back(std::string(e) + sign, e);
  return TsMap::from_names(w, c, s,
                           {{"u", cube_action_name(x, 1)},
                            {"vm", cube_action_name(x, 2)},
                            {"vp", cube_action_name(x, 2)}});
}

Tsys wbar3(const std::string& x) {
  Doubled d = doubled_cube(x, 3, 1, {"u1", "", "u3"}, "um", "up");
  return final_lift(d.profile, d.cone);
}

TsMap wbar3_attach(const std::string& x) {
  Tsys w = wbar3(x);
  Coproduct two = coproduct({cube({x}), cube({x})});
  const std::string u = cube_action_name(x, 1);
  return TsMap::from_names(
      two.object, w,
      {{"0.0", "100-"}, {"0.1", "110-"}, {"1.0", "100+"}, {"1.1", "110+"}},
      {{"0." + u, "um"}, {"1." + u, "up"}});
}

Pushout wbar3_pushout(const std::string& x, PushoutMode mode) {
  return pushout(generator("p", {x}), wbar3_attach(x), mode);
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "intro", "csa1diff", "wbar2", "wbar2_map", "wbar3", "wbar3_attach",
      "wbar3_pushout"};
  return names;
}

Example example(const std::string& name,
                const std::vector<std::string>& params) {
  auto label = [&](std::size_t i) {
    return params.size() > i ? params[i] : std::string("x");
  };
  if (name == "intro") {
    if (params.size() != 1) throw ArityMismatch("intro expects one integer");
    int n = 0;
    try {
      n = std::stoi(params[0]);
    } catch (const std::exception&) {
      throw ArityMismatch("intro expects one integer");
    }
    return intro_example(n);
  }
  if (name == "csa1diff") return csa1diff();
  if (name == "wbar2") return wbar2(label(0));
  if (name == "wbar2_map") return wbar2_map(label(0));
  if (name == "wbar3") return wbar3(label(0));
  if (name == "wbar3_attach") return wbar3_attach(label(0));
  if (name == "wbar3_pushout") {
    PushoutMode mode = PushoutMode::Cts;
    if (params.size() > 1) {
      if (params[1] == "rts")
        mode = PushoutMode::Rts;
      else if (params[1] != "cts")
        throw ArityMismatch("wbar3_pushout mode must be cts or rts");
    }
    return wbar3_pushout(label(0), mode).leg_c;
  }
  throw std::invalid_argument("unknown example " + name);
}

}  // namespace hdts
