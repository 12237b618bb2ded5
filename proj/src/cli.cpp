#include "hdts/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hdts/axioms.hpp"
#include "hdts/builders.hpp"
#include "hdts/cats.hpp"
#include "hdts/homotopy.hpp"
#include "hdts/io.hpp"
#include "hdts/reflect.hpp"

namespace hdts {
namespace {

namespace fs = std::filesystem;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(const std::string& path, Io& io) {
  std::ostringstream ss;
  if (path == "-") {
    ss << io.in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Tsys load_tsys(const std::string& path, Io& io) {
  std::vector<std::string> warnings;
  Tsys x = parse_tsys(slurp(path, io), &warnings);
  for (const auto& w : warnings) io.err << path << ": warning: " << w << '\n';
  return x;
}

fs::path base_dir(const std::string& path) {
  if (path.empty() || path == "-") return fs::current_path();
  return fs::absolute(path).parent_path();
}

TsMap load_map(const std::string& path, Io& io) {
  fs::path dir = base_dir(path);
  return parse_map(slurp(path, io), [&](const std::string& p) {
    fs::path q(p);
    return load_tsys((q.is_absolute() ? q : dir / q).string(), io);
  });
}

// Reference to `target` as written inside a map file stored at `map_path`.
std::string relative_ref(const std::string& target, const std::string& map_path) {
  if (target == "-") return target;
  std::error_code ec;
  fs::path r = fs::relative(fs::absolute(target), base_dir(map_path), ec);
  return ec || r.empty() ? fs::absolute(target).string() : r.generic_string();
}

void write_map(const TsMap& f, const std::string& map_path,
               const std::string& from, const std::string& to, Io& io) {
  emit(map_path,
       serialize_map(f, relative_ref(from, map_path), relative_ref(to, map_path)),
       io);
}

int verdict(bool b, Io& io) {
  io.out << (b ? "true" : "false") << '\n';
  return b ? 0 : 1;
}

std::string sidecar(const std::string& out, const std::string& suffix) {
  fs::path p(out);
  fs::path stem = p.parent_path() / p.stem();
  return stem.string() + suffix;
}

// Writes the domain and codomain next to the map.
void write_map_with_ends(const TsMap& f, const std::string& out, Io& io) {
  if (out.empty() || out == "-")
    throw UsageError("a map needs -o FILE so its endpoints can be written");
  std::string dom = sidecar(out, ".dom.hdts");
  std::string cod = sidecar(out, ".cod.hdts");
  emit(dom, serialize_tsys(f.domain()), io);
  emit(cod, serialize_tsys(f.codomain()), io);
  write_map(f, out, dom, cod, io);
}

int gen(const std::string& name, const std::vector<std::string>& args,
        const std::string& out, Io& io) {
  auto one = [&]() -> const std::string& {
    if (args.size() != 1) throw ArityMismatch(name + " takes one label");
    return args.front();
  };
  auto sys = [&](const Tsys& x) {
    emit(out, serialize_tsys(x), io);
    return 0;
  };
  if (name == "cube") return sys(cube(args));
  if (name == "pure_transition") return sys(pure_transition(args));
  if (name == "boundary") return sys(boundary(args));
  if (name == "double_transition") return sys(double_transition(one()));
  if (name == "bare_action") return sys(bare_action(one()));
  if (name == "zx") return sys(zx(one()));
  const auto& gens = generator_names();
  if (std::find(gens.begin(), gens.end(), name) != gens.end()) {
    write_map_with_ends(generator(name, args), out, io);
    return 0;
  }
  const auto& exs = example_names();
  if (std::find(exs.begin(), exs.end(), name) != exs.end()) {
    Example e = example(name, args);
    if (auto* x = std::get_if<Tsys>(&e)) return sys(*x);
    write_map_with_ends(std::get<TsMap>(e), out, io);
    return 0;
  }
  throw UsageError("unknown system or map '" + name + "'");
}

std::string normalise(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

struct Args {
  std::string s1, s2, s3, o, extra;
  std::vector<std::string> rest;
};

int dispatch(const std::string& cmd, const Args& a, Io& io, std::uint64_t budget) {
  if (cmd == "check") {
    Tsys x = load_tsys(a.s1, io);
    AxiomReport r = classify(x);
    io.out << (a.s2 == "json" ? report_json(x, r) : format_report(x, r));
    return 0;
  }
  if (cmd == "gen") {
    return gen(a.s1, a.rest, a.o, io);
  }
  if (cmd == "reflect") {
    std::string in = a.s2, out = a.o, unit = a.extra;
    Reflection r = reflect(parse_reflector_kind(a.s1), load_tsys(in, io));
    emit(out, serialize_tsys(r.object), io);
    if (!unit.empty()) write_map(r.unit, unit, in, out, io);
    return 0;
  }
  if (cmd == "coreflect") {
    std::string kind = a.s1, in = a.s2, out = a.o, counit = a.extra;
    Tsys x = load_tsys(in, io);
    Coreflection c = kind == "cub"   ? cubification(x, budget)
                     : kind == "cts" ? cts_coreflection(x, budget)
                                     : intermediate_saturation(x, budget);
    emit(out, serialize_tsys(c.object), io);
    if (!counit.empty()) write_map(c.counit, counit, out, in, io);
    return 0;
  }
  if (cmd == "cyl") {
    emit(a.o, serialize_tsys(cyl(load_tsys(a.s1, io)).object), io);
    return 0;
  }
  if (cmd == "cocyl") {
    emit(a.o, serialize_tsys(cocyl(load_tsys(a.s1, io), budget).object), io);
    return 0;
  }
  if (cmd == "product") {
    Product p = product(load_tsys(a.s1, io), load_tsys(a.s2, io));
    emit(a.o, serialize_tsys(p.object), io);
    return 0;
  }
  if (cmd == "pushout") {
    TsMap f = load_map(a.s1, io), g = load_map(a.s2, io);
    PushoutMode mode = a.s3 == "rts" ? PushoutMode::Rts : PushoutMode::Cts;
    emit(a.o, serialize_tsys(pushout(f, g, mode).object), io);
    return 0;
  }
  if (cmd == "weq") {
    Structure s = parse_structure(normalise(a.s2));
    return verdict(is_weq(load_map(a.s1, io), s), io);
  }
  if (cmd == "fibrant") {
    std::string s = normalise(a.s2);
    Tsys x = load_tsys(a.s1, io);
    if (s == "ld") {
      Verdict v = is_fibrant_ld(x);
      io.out << (v == Verdict::True ? "true" : v == Verdict::False ? "false" : "unknown")
             << '\n';
      return v == Verdict::True ? 0 : 1;
    }
    return verdict(is_fibrant(x, parse_structure(s)), io);
  }
  if (cmd == "iso") {
    return verdict(iso_search(load_tsys(a.s1, io), load_tsys(a.s2, io),
                              budget)
                       .has_value(),
                   io);
  }
  if (cmd == "rlp") {
    return verdict(has_rlp(load_map(a.s1, io), load_map(a.s2, io), budget),
                   io);
  }
  throw UsageError("unknown subcommand " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Finite higher-dimensional transition systems", "hdts"};
  app.require_subcommand(1);
  std::uint64_t budget = kDefaultBudget;
  app.add_option("--budget", budget, "search node budget");

  Args a;
  auto& [s1, s2, s3, o, extra, rest] = a;

  auto* check = app.add_subcommand("check", "classify a system against the axioms");
  check->add_option("file", s1)->required();
  check->add_option("--report", s2, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* g = app.add_subcommand("gen", "write a standard system, map or example");
  g->add_option("name", s1)->required();
  g->add_option("args", rest);
  g->add_option("-o", o);

  auto* r = app.add_subcommand("reflect", "apply a reflector");
  r->add_option("kind", s1)->required()->check(CLI::IsMember(
      {"csa2", "csa1-cts", "csa1-rts", "ls-cts", "ls-rts"}));
  r->add_option("file", s2)->required();
  r->add_option("-o", o);
  r->add_option("--unit", extra);

  auto* c = app.add_subcommand("coreflect", "apply a coreflector");
  c->add_option("kind", s1)->required()->check(CLI::IsMember({"cub", "cts", "sat"}));
  c->add_option("file", s2)->required();
  c->add_option("-o", o);
  c->add_option("--counit", extra);

  for (const char* name : {"cyl", "cocyl"}) {
    auto* s = app.add_subcommand(name, name == std::string("cyl") ? "cylinder"
                                                                   : "path object");
    s->add_option("file", s1)->required();
    s->add_option("-o", o);
  }

  auto* p = app.add_subcommand("product", "product of two systems");
  p->add_option("a", s1)->required();
  p->add_option("b", s2)->required();
  p->add_option("-o", o);

  auto* po = app.add_subcommand("pushout", "pushout of two maps with common domain");
  po->add_option("f", s1)->required();
  po->add_option("g", s2)->required();
  po->add_option("--mode", s3)->default_val("cts")->check(CLI::IsMember({"cts", "rts"}));
  po->add_option("-o", o);

  auto* w = app.add_subcommand("weq", "decide whether a map is a weak equivalence");
  w->add_option("map", s1)->required();
  w->add_option("--structure", s2)->required()->check(
      CLI::IsMember({"ld-cts", "ld-rts", "bl-cts", "bl-rts"}));

  auto* f = app.add_subcommand("fibrant", "decide fibrancy");
  f->add_option("file", s1)->required();
  f->add_option("--structure", s2)->required()->check(
      CLI::IsMember({"bl-cts", "bl-rts", "ld"}));
  f->add_flag("--sufficient-only", "accepted for the ld structure");

  auto* i = app.add_subcommand("iso", "decide isomorphism");
  i->add_option("a", s1)->required();
  i->add_option("b", s2)->required();

  auto* l = app.add_subcommand("rlp", "decide the right lifting property of P against I");
  l->add_option("p", s1)->required();
  l->add_option("i", s2)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), a, io, budget);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at " << e.line() << ':' << e.column() << ": " << e.what()
        << '\n';
    return 3;
  } catch (const UnresolvedReference& e) {
    err << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const InvalidSystem& e) {
    err << "invalid system:";
    for (const auto& v : e.violations()) err << "\n  " << v;
    err << '\n';
    return 3;
  } catch (const InvalidMap& e) {
    err << "invalid map: " << e.what() << '\n';
    return 3;
  } catch (const SizeLimitExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 5;
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << '\n';
    return 4;
  } catch (const ArityMismatch& e) {
    err << "arity mismatch: " << e.what() << '\n';
    return 4;
  } catch (const MalformedCone& e) {
    err << "precondition failed: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hdts
