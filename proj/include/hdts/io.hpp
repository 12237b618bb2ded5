// Text formats for systems and maps, and report rendering.
//
// System:                       Map:
//   hdts 1                        hdts-map 1
//   state <name>                  from <path> ; to <path>
//   action <name> <label>         state <src> <dst>
//   trans <src> <a1> .. <tgt>     action <src> <dst>
//
// '#' starts a comment. Identifiers match [A-Za-z0-9_.+:-]+.
#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hdts/axioms.hpp"
#include "hdts/core.hpp"

namespace hdts {

bool is_identifier(std::string_view s);

// Duplicate transition lines are dropped with a warning.
Tsys parse_tsys(std::string_view text,
                std::vector<std::string>* warnings = nullptr);
std::string serialize_tsys(const Tsys& x);

struct MapHeader {
  std::string from;
  std::string to;
};

using SystemResolver = std::function<Tsys(const std::string& path)>;

MapHeader parse_map_header(std::string_view text);
TsMap parse_map(std::string_view text, const SystemResolver& resolve);
std::string serialize_map(const TsMap& f, const std::string& from_path,
                          const std::string& to_path);

std::string report_json(const Tsys& x, const AxiomReport& r);

}  // namespace hdts
