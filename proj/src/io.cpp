#include "siflab/io.hpp"

#include <fstream>

namespace siflab::io {

namespace {

const char* kComponentKeys[4] = {"hi", "li", "ho", "lo"};

template <class T>
T get(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(where) + ": bad \"" + key + "\": " + e.what());
  }
}

Tuple4 tuple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("a trace letter must be a 4-element array");
  Tuple4 t;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_string() && !j[k].is_number_integer())
      throw ParseError("trace symbols must be strings");
    t[k] = j[k].is_string() ? j[k].get<std::string>() : std::to_string(j[k].get<long long>());
  }
  return t;
}

std::vector<Tuple4> word_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("trace prefix/cycle must be arrays");
  std::vector<Tuple4> out;
  for (const auto& x : j) out.push_back(tuple_from_json(x));
  return out;
}

json word_to_json(const std::vector<Tuple4>& w) {
  json out = json::array();
  for (const auto& t : w) out.push_back(json::array({t[0], t[1], t[2], t[3]}));
  return out;
}

std::vector<LassoTrace> traces_from_json(const json& j, const Alphabets& a) {
  if (!j.is_array()) throw ParseError("\"traces\" must be an array");
  std::vector<LassoTrace> out;
  for (const auto& t : j) out.push_back(trace_from_json(t, a));
  return out;
}

json traces_to_json(const System& s) {
  json out = json::array();
  for (const auto& t : s) out.push_back(to_json(t));
  return out;
}

}  // namespace

json to_json(const Alphabets& a) {
  json out = json::object();
  for (int k = 0; k < 4; ++k) out[kComponentKeys[k]] = a.symbols[k];
  return out;
}

Alphabets alphabets_from_json(const json& j) {
  Alphabets a;
  for (int k = 0; k < 4; ++k) {
    a.symbols[k] = get<std::vector<std::string>>(j, kComponentKeys[k], "alphabets");
    if (a.symbols[k].empty()) throw ParseError("alphabets must be nonempty");
  }
  return a;
}

json to_json(const LassoTrace& t) {
  return {{"prefix", word_to_json(t.prefix())}, {"cycle", word_to_json(t.cycle())}};
}

LassoTrace trace_from_json(const json& j, const Alphabets& a) {
  if (!j.is_object()) throw ParseError("a trace must be an object with prefix/cycle");
  auto prefix = j.contains("prefix") ? word_from_json(j["prefix"]) : std::vector<Tuple4>{};
  auto cycle = j.contains("cycle") ? word_from_json(j["cycle"]) : std::vector<Tuple4>{};
  return canonicalize(a, std::move(prefix), std::move(cycle));
}

json to_json(const System& s) {
  return {{"alphabets", to_json(s.space()->alphabets())}, {"traces", traces_to_json(s)}};
}

System system_from_json(const json& j) {
  const Alphabets a = j.contains("alphabets") ? alphabets_from_json(j["alphabets"])
                                              : Alphabets::binary();
  auto space = a == Alphabets::binary() ? binary_space()
                                        : std::make_shared<const TraceSpace>(a);
  if (!j.contains("traces")) throw ParseError("system: missing \"traces\"");
  return System::make(space, traces_from_json(j["traces"], a));
}

json to_json(const StrategySystem& ss) {
  json fams = json::object();
  for (const auto& [name, sys] : ss.families()) fams[name] = traces_to_json(sys);
  return {{"alphabets", to_json(ss.space()->alphabets())}, {"families", fams}};
}

StrategySystem strategy_system_from_json(const json& j) {
  const Alphabets a = j.contains("alphabets") ? alphabets_from_json(j["alphabets"])
                                              : Alphabets::binary();
  auto space = a == Alphabets::binary() ? binary_space()
                                        : std::make_shared<const TraceSpace>(a);
  if (!j.contains("families") || !j["families"].is_object())
    throw ParseError("strategy system: missing \"families\" object");
  std::map<std::string, System> families;
  for (const auto& [name, fam] : j["families"].items()) {
    const json& traces = fam.is_object() ? fam.at("traces") : fam;
    families.emplace(name, System::make(space, traces_from_json(traces, a)));
  }
  return StrategySystem::make(std::move(families));
}

json to_json(const AsyncSystem& s) {
  json events = json::array();
  for (const auto& e : s.events())
    events.push_back({{"name", e.name}, {"level", e.level == Level::High ? "H" : "L"}});
  return {{"events", events}, {"traces", s.traces()}};
}

AsyncSystem async_system_from_json(const json& j) {
  std::vector<Event> events;
  if (!j.contains("events") || !j["events"].is_array())
    throw ParseError("async system: missing \"events\" array");
  for (const auto& e : j["events"]) {
    auto level = get<std::string>(e, "level", "event");
    if (level != "H" && level != "L") throw ParseError("event level must be \"H\" or \"L\"");
    events.push_back({get<std::string>(e, "name", "event"), level == "H" ? Level::High : Level::Low});
  }
  auto traces = get<std::vector<EventTrace>>(j, "traces", "async system");
  return AsyncSystem::make(std::move(events), std::move(traces));
}

ExtensionalSif sif_table_from_json(const json& j, const Alphabets& a) {
  if (!j.is_array()) throw ParseError("a SIF table must be an array of triples");
  ExtensionalSif f;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3)
      throw ParseError("a SIF table row must be [first, second, result]");
    auto key = std::make_pair(trace_from_json(row[0], a), trace_from_json(row[1], a));
    auto value = trace_from_json(row[2], a);
    auto [it, inserted] = f.table.emplace(key, value);
    if (!inserted && !(it->second == value))
      throw ParseError("a SIF table maps one pair to two traces");
  }
  return f;
}

json to_json(const ExtensionalSif& f) {
  json out = json::array();
  for (const auto& [key, value] : f.table)
    out.push_back(json::array({to_json(key.first), to_json(key.second), to_json(value)}));
  return out;
}

namespace {

bool matches(const std::string& pattern, const std::string& value) {
  return pattern == "*" || pattern == value;
}

std::vector<std::string> states_of(const json& j, const char* where) {
  auto states = get<std::vector<std::string>>(j, "states", where);
  if (states.empty()) throw ParseError(std::string(where) + ": no states");
  return states;
}

// inputs drawn from `in`, outputs from `out`
UserProtocol user_from_json(const json& j, const std::vector<Symbol>& in,
                            const std::vector<Symbol>& out, const char* where) {
  UserProtocol p;
  p.states = states_of(j, where);
  p.initial = get<std::string>(j, "initial", where);
  auto emit = get<std::map<std::string, std::vector<std::string>>>(j, "emit", where);
  for (const auto& s : p.states) {
    auto it = emit.find(s);
    if (it == emit.end() || it->second.empty())
      throw ParseError(std::string(where) + ": state '" + s + "' has no emission set");
    p.emit[s] = it->second;
  }
  const json& rows = j.at("update");
  for (const auto& s : p.states)
    for (const auto& x : in)
      for (const auto& y : out)
        for (const auto& row : rows) {
          if (matches(get<std::string>(row, "state", where), s) &&
              matches(get<std::string>(row, "input", where), x) &&
              matches(get<std::string>(row, "output", where), y)) {
            p.update[{s, x, y}] = get<std::string>(row, "next", where);
            break;
          }
        }
  return p;
}

SystemProtocol system_from_json_protocol(const json& j, const Alphabets& a) {
  const char* where = "system protocol";
  SystemProtocol p;
  p.states = states_of(j, where);
  p.initial = get<std::string>(j, "initial", where);
  const auto& HI = a.of(Component::HighIn);
  const auto& LI = a.of(Component::LowIn);
  auto resolve = [](const std::string& sym, const std::string& hi, const std::string& li) {
    if (sym == "=hi") return hi;
    if (sym == "=li") return li;
    return sym;
  };
  for (const auto& s : p.states)
    for (const auto& hi : HI)
      for (const auto& li : LI)
        for (const auto& row : j.at("output")) {
          if (matches(get<std::string>(row, "state", where), s) &&
              matches(get<std::string>(row, "hi", where), hi) &&
              matches(get<std::string>(row, "li", where), li)) {
            std::vector<std::pair<Symbol, Symbol>> outs;
            for (const auto& o : row.at("out")) {
              if (!o.is_array() || o.size() != 2)
                throw ParseError("system output entries must be [ho, lo] pairs");
              outs.emplace_back(resolve(o[0].get<std::string>(), hi, li),
                                resolve(o[1].get<std::string>(), hi, li));
            }
            p.output[{s, hi, li}] = std::move(outs);
            break;
          }
        }
  for (const auto& s : p.states)
    for (const auto& hi : HI)
      for (const auto& li : LI)
        for (const auto& ho : a.of(Component::HighOut))
          for (const auto& lo : a.of(Component::LowOut))
            for (const auto& row : j.at("update")) {
              if (matches(get<std::string>(row, "state", where), s) &&
                  matches(get<std::string>(row, "hi", where), hi) &&
                  matches(get<std::string>(row, "li", where), li) &&
                  matches(get<std::string>(row, "ho", where), ho) &&
                  matches(get<std::string>(row, "lo", where), lo)) {
                p.update[{s, hi, li, ho, lo}] = get<std::string>(row, "next", where);
                break;
              }
            }
  return p;
}

}  // namespace

ProtocolBundle protocols_from_json(const json& j) {
  const Alphabets a = j.contains("alphabets") ? alphabets_from_json(j["alphabets"])
                                              : Alphabets::binary();
  ProtocolBundle b;
  b.space = a == Alphabets::binary() ? binary_space() : std::make_shared<const TraceSpace>(a);
  try {
    b.system = system_from_json_protocol(j.at("system"), a);
    b.low = user_from_json(j.at("low"), a.of(Component::LowIn), a.of(Component::LowOut),
                           "low protocol");
    if (!j.at("high").is_object() || j.at("high").empty())
      throw ParseError("\"high\" must map protocol names to protocols");
    for (const auto& [name, h] : j.at("high").items())
      b.highs.emplace(name, user_from_json(h, a.of(Component::HighIn), a.of(Component::HighOut),
                                           "high protocol"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("protocol file: ") + e.what());
  }
  return b;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

System load_system(const std::filesystem::path& path) { return system_from_json(read_json(path)); }

StrategySystem load_strategy_system(const std::filesystem::path& path) {
  return strategy_system_from_json(read_json(path));
}

AsyncSystem load_async_system(const std::filesystem::path& path) {
  return async_system_from_json(read_json(path));
}

}  // namespace siflab::io
