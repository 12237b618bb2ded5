#include "hdts/io.hpp"

#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hdts {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '+' ||
              c == ':' || c == '-';
    if (!ok) return false;
  }
  return true;
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Non-empty lines split into tokens, comments removed.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line = 1, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(pos, end - pos);
    if (auto hash = l.find('#'); hash != std::string_view::npos)
      l = l.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < l.size()) {
      while (i < l.size() && (l[i] == ' ' || l[i] == '\t' || l[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < l.size() && l[j] != ' ' && l[j] != '\t' && l[j] != '\r') ++j;
      if (j > i) toks.push_back({std::string(l.substr(i, j - i)), line, i + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
  return lines;
}

const Token& ident(const Token& t) {
  if (!is_identifier(t.text))
    throw ParseError("invalid identifier '" + t.text + "'", t.line, t.column);
  return t;
}

void expect_header(const std::vector<std::vector<Token>>& lines,
                   const std::string& magic) {
  if (lines.empty())
    throw ParseError("missing header '" + magic + " 1'", 1, 1);
  const auto& h = lines.front();
  if (h.size() != 2 || h[0].text != magic || h[1].text != "1")
    throw ParseError("expected header '" + magic + " 1'", h[0].line,
                     h[0].column);
}

}  // namespace

Tsys parse_tsys(std::string_view text, std::vector<std::string>* warnings) {
  auto lines = tokenize(text);
  expect_header(lines, "hdts");
  TsysData data;
  std::map<std::string, std::string> labels;
  std::set<std::string> states;
  struct PendingTrans {
    std::vector<Token> toks;
  };
  std::vector<PendingTrans> trans;
  auto warn = [&](const Token& t, const std::string& msg) {
    if (warnings)
      warnings->push_back("line " + std::to_string(t.line) + ": " + msg);
  };
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const Token& kw = l[0];
    if (kw.text == "state") {
      if (l.size() != 2)
        throw ParseError("state takes one name", kw.line, kw.column);
      const std::string& n = ident(l[1]).text;
      if (!states.insert(n).second)
        warn(l[1], "duplicate state " + n + " ignored");
      else
        data.states.push_back(n);
    } else if (kw.text == "action") {
      if (l.size() != 3)
        throw ParseError("action takes a name and a label", kw.line, kw.column);
      const std::string& n = ident(l[1]).text;
      const std::string& lab = ident(l[2]).text;
      auto [it, fresh] = labels.emplace(n, lab);
      if (!fresh) {
        if (it->second != lab)
          throw ParseError("action " + n + " redeclared with another label",
                           l[2].line, l[2].column);
        warn(l[1], "duplicate action " + n + " ignored");
      } else {
        data.actions.emplace_back(n, lab);
      }
    } else if (kw.text == "trans") {
      if (l.size() < 4)
        throw ParseError("trans takes a source, at least one action and a target",
                         kw.line, kw.column);
      for (std::size_t i = 1; i < l.size(); ++i) ident(l[i]);
      trans.push_back({l});
    } else {
      throw ParseError("unknown keyword '" + kw.text + "'", kw.line, kw.column);
    }
  }
  std::set<std::tuple<std::string, std::vector<std::string>, std::string>> seen;
  for (const auto& p : trans) {
    const auto& l = p.toks;
    NamedTransition t;
    t.source = l[1].text;
    t.target = l.back().text;
    if (!states.count(t.source))
      throw ParseError("undeclared state " + t.source, l[1].line, l[1].column);
    if (!states.count(t.target))
      throw ParseError("undeclared state " + t.target, l.back().line,
                       l.back().column);
    for (std::size_t i = 2; i + 1 < l.size(); ++i) {
      if (!labels.count(l[i].text))
        throw ParseError("undeclared action " + l[i].text, l[i].line,
                         l[i].column);
      t.word.push_back(l[i].text);
    }
    if (!seen.insert({t.source, t.word, t.target}).second) {
      warn(l[0], "duplicate transition ignored");
      continue;
    }
    data.transitions.push_back(std::move(t));
  }
  return Tsys(data);
}

std::string serialize_tsys(const Tsys& x) {
  std::ostringstream os;
  os << "hdts 1\n";
  for (const auto& s : x.state_names()) os << "state " << s << '\n';
  for (std::size_t a = 0; a < x.num_actions(); ++a)
    os << "action " << x.action_name(static_cast<int>(a)) << ' '
       << x.label(static_cast<int>(a)) << '\n';
  for (const auto& t : x.transitions()) {
    os << "trans " << x.state_name(t.source);
    for (int a : t.word) os << ' ' << x.action_name(a);
    os << ' ' << x.state_name(t.target) << '\n';
  }
  return os.str();
}

namespace {

MapHeader header_of(const std::vector<std::vector<Token>>& lines) {
  expect_header(lines, "hdts-map");
  if (lines.size() < 2)
    throw ParseError("missing 'from <path> ; to <path>' line", 2, 1);
  const auto& l = lines[1];
  if (l.size() != 5 || l[0].text != "from" || l[2].text != ";" ||
      l[3].text != "to")
    throw ParseError("expected 'from <path> ; to <path>'", l[0].line,
                     l[0].column);
  return MapHeader{l[1].text, l[4].text};
}

}  // namespace

MapHeader parse_map_header(std::string_view text) {
  return header_of(tokenize(text));
}

TsMap parse_map(std::string_view text, const SystemResolver& resolve) {
  auto lines = tokenize(text);
  MapHeader h = header_of(lines);
  Tsys dom = resolve(h.from);
  Tsys cod = resolve(h.to);
  std::vector<int> s(dom.num_states(), -1), a(dom.num_actions(), -1);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const Token& kw = l[0];
    if (l.size() != 3 || (kw.text != "state" && kw.text != "action"))
      throw ParseError("expected 'state <src> <dst>' or 'action <src> <dst>'",
                       kw.line, kw.column);
    const bool st = kw.text == "state";
    auto src = st ? dom.find_state(l[1].text) : dom.find_action(l[1].text);
    auto dst = st ? cod.find_state(l[2].text) : cod.find_action(l[2].text);
    if (!src)
      throw UnresolvedReference("line " + std::to_string(l[1].line) +
                                ": unknown " + kw.text + " " + l[1].text +
                                " in " + h.from);
    if (!dst)
      throw UnresolvedReference("line " + std::to_string(l[2].line) +
                                ": unknown " + kw.text + " " + l[2].text +
                                " in " + h.to);
    int& slot = st ? s[*src] : a[*src];
    if (slot != -1 && slot != *dst)
      throw ParseError(kw.text + " " + l[1].text + " mapped twice", l[1].line,
                       l[1].column);
    slot = *dst;
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0)
      throw ParseError("state " + dom.state_name(static_cast<int>(i)) +
                           " has no image",
                       lines.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0)
      throw ParseError("action " + dom.action_name(static_cast<int>(i)) +
                           " has no image",
                       lines.size(), 1);
  return TsMap(dom, cod, std::move(s), std::move(a));
}

std::string serialize_map(const TsMap& f, const std::string& from_path,
                          const std::string& to_path) {
  std::ostringstream os;
  os << "hdts-map 1\nfrom " << from_path << " ; to " << to_path << '\n';
  const Tsys& d = f.domain();
  const Tsys& c = f.codomain();
  for (std::size_t s = 0; s < d.num_states(); ++s)
    os << "state " << d.state_name(static_cast<int>(s)) << ' '
       << c.state_name(f.state(static_cast<int>(s))) << '\n';
  for (std::size_t a = 0; a < d.num_actions(); ++a)
    os << "action " << d.action_name(static_cast<int>(a)) << ' '
       << c.action_name(f.action(static_cast<int>(a))) << '\n';
  return os.str();
}

namespace {

using nlohmann::json;

json transition_json(const Tsys& x, const Transition& t) {
  json w = json::array();
  for (int a : t.word) w.push_back(x.action_name(a));
  return json{{"source", x.state_name(t.source)},
              {"word", w},
              {"target", x.state_name(t.target)}};
}

template <class W, class F>
json check_json(const AxiomCheck<W>& c, F render) {
  json ws = json::array();
  for (const auto& w : c.witnesses) ws.push_back(render(w));
  return json{{"pass", c.pass}, {"violations", c.violations}, {"witnesses", ws}};
}

}  // namespace

std::string report_json(const Tsys& x, const AxiomReport& r) {
  auto missing = [&](const MissingTransition& w) {
    return json{{"present", transition_json(x, w.present)},
                {"missing", transition_json(x, w.missing)}};
  };
  auto split = [&](const SplitFailure& w) {
    json s = json::array();
    for (int v : w.states) s.push_back(x.state_name(v));
    return json{{"transition", transition_json(x, w.whole)},
                {"p", w.p},
                {"states", s}};
  };
  json j;
  j["multiset"] = check_json(r.multiset, missing);
  j["composition"] = check_json(r.composition, [&](const CompositionFailure& w) {
    return json{{"transition", transition_json(x, w.whole)},
                {"p", w.p},
                {"q", w.q},
                {"missing", transition_json(x, w.missing)}};
  });
  j["all_actions_used"] = check_json(
      r.all_actions_used, [&](int a) { return json(x.action_name(a)); });
  j["intermediate_state"] = check_json(r.intermediate_state, split);
  j["unique_intermediate_state"] = check_json(r.unique_intermediate_state, split);
  j["csa1"] = check_json(r.csa1, [&](const ParallelActions& w) {
    return json{{"source", x.state_name(w.source)},
                {"actions", {x.action_name(w.first), x.action_name(w.second)}},
                {"target", x.state_name(w.target)}};
  });
  j["deterministic_labelling"] =
      check_json(r.deterministic_labelling, [&](const SharedLabel& w) {
        return json{x.action_name(w.first), x.action_name(w.second)};
      });
  j["combinatorially_fibrant"] = check_json(r.combinatorially_fibrant, missing);
  j["weak"] = r.weak();
  j["cubical"] = r.cubical();
  j["regular"] = r.regular();
  return j.dump(2) + "\n";
}

}  // namespace hdts
