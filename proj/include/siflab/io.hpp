#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "siflab/sif_families.hpp"
#include "siflab/strategy.hpp"
#include "siflab/zl_psp.hpp"

namespace siflab::io {

using nlohmann::json;

json to_json(const Alphabets& a);
Alphabets alphabets_from_json(const json& j);

json to_json(const LassoTrace& t);
LassoTrace trace_from_json(const json& j, const Alphabets& a);

/// `{ "alphabets": {...}, "traces": [ {"prefix": [...], "cycle": [...]} ] }`.
/// Traces are canonicalized; duplicates after canonicalization are an error.
json to_json(const System& s);
System system_from_json(const json& j);

/// `{ "alphabets": {...}, "families": { "H": [traces] , ... } }`. A family
/// may also be given as an object with a "traces" array.
json to_json(const StrategySystem& ss);
StrategySystem strategy_system_from_json(const json& j);

/// `{ "events": [{"name": "h1", "level": "H"}], "traces": [["h1","l1"]] }`.
json to_json(const AsyncSystem& s);
AsyncSystem async_system_from_json(const json& j);

/// List of `[first, second, result]` trace triples.
ExtensionalSif sif_table_from_json(const json& j, const Alphabets& a);
json to_json(const ExtensionalSif& f);

/// A protocol bundle: alphabets, the system and low protocols, the named high
/// protocols. Table keys may use "*" to match any symbol.
struct ProtocolBundle {
  SpacePtr space;
  SystemProtocol system;
  UserProtocol low;
  std::map<std::string, UserProtocol> highs;
};
ProtocolBundle protocols_from_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

System load_system(const std::filesystem::path& path);
StrategySystem load_strategy_system(const std::filesystem::path& path);
AsyncSystem load_async_system(const std::filesystem::path& path);

}  // namespace siflab::io
