#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "siflab/enumerate.hpp"
#include "siflab/gen_sifs.hpp"
#include "siflab/io.hpp"
#include "siflab/properties.hpp"
#include "siflab/sif_types.hpp"
#include "siflab/strategy.hpp"
#include "siflab/verify.hpp"
#include "siflab/zl_psp.hpp"

using namespace siflab;
using io::json;

namespace {

/// Exit codes: the checked statement holds, fails, or the input was unusable.
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Output {
  bool as_json = false;

  int verdict(json j, bool holds, const std::string& text) const {
    if (as_json) {
      j["holds"] = holds;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text << ": " << (holds ? "holds" : "fails") << "\n";
    }
    return holds ? kHolds : kFails;
  }
};

int run_check(const std::string& property, const std::string& file, const Output& out) {
  json j{{"property", property}, {"system", file}};
  if (property == "nos") {
    auto ss = io::load_strategy_system(file);
    if (!check_injectivity(ss)) throw PreconditionError("strategy system is not injective");
    return out.verdict(j, check_nos(ss), "NOS");
  }
  if (property == "psp") {
    auto s = io::load_async_system(file);
    return out.verdict(j, psp_check(s), "PSP");
  }
  const auto kind = parse_property(property);
  const auto s = io::load_system(file);
  return out.verdict(j, check_property(kind, s), property_name(kind));
}

int run_closure(const std::string& type, const std::vector<std::string>& conj,
                const std::string& file, const Output& out) {
  const auto s = io::load_system(file);
  if (!type.empty()) {
    const auto t = parse_type(type);
    return out.verdict({{"type", to_string(t)}, {"system", file}}, closed_under_type(s, t),
                       "closed under " + to_string(t));
  }
  const auto a = parse_type(conj.at(0));
  const auto b = parse_type(conj.at(1));
  const std::string name = "[" + to_string(a) + ", " + to_string(b) + "]";
  return out.verdict({{"gen_conj", {to_string(a), to_string(b)}}, {"system", file}},
                     closed_under_gen(s, conj_family(a, b)), "closed under " + name);
}

int run_represent(const std::string& property, const std::string& type,
                  const EnumerationParams& params, const Output& out) {
  const auto kind = parse_property(property);
  const auto t = parse_type(type);
  const auto universe = enumerate_systems(params);
  std::optional<std::string> counterexample;
  universe.for_each([&](const System& s) {
    if (!counterexample && check_property(kind, s) != closed_under_type(s, t))
      counterexample = to_string(s);
  });
  json j{{"property", property_name(kind)},
         {"type", to_string(t)},
         {"systems", universe.size()}};
  if (counterexample) j["counterexample"] = *counterexample;
  std::string text = to_string(t) + " represents " + property_name(kind) + " over " +
                     std::to_string(universe.size()) + " systems";
  if (counterexample && !out.as_json) std::cout << "counterexample: " << *counterexample << "\n";
  return out.verdict(j, !counterexample, text);
}

int run_refute(const std::string& property, const std::vector<std::string>& files,
               const Output& out) {
  std::vector<RefutationCandidate> pool;
  for (const auto& f : files) {
    if (property == "nos") {
      auto ss = io::load_strategy_system(f);
      pool.push_back({f, ss.union_system(), check_nos(ss)});
    } else {
      auto s = io::load_system(f);
      const bool holds = check_property(parse_property(property), s);
      pool.push_back({f, std::move(s), holds});
    }
  }
  const auto report = refute_all_types(pool);
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json e{{"type", to_string(v.type)}, {"refuted", v.refuted()}};
    if (v.refuted()) {
      e["witness"] = *v.witness;
      e["direction"] = direction_name(v.direction);
    }
    verdicts.push_back(std::move(e));
    if (!out.as_json) {
      std::cout << to_string(v.type) << "  ";
      if (v.refuted())
        std::cout << *v.witness << " (" << direction_name(v.direction) << ")\n";
      else
        std::cout << "unrefuted\n";
    }
  }
  return out.verdict({{"property", property}, {"verdicts", verdicts}}, report.all_refuted(),
                     std::to_string(report.refuted_count()) + "/81 types refuted; every type refuted");
}

int run_generate(const std::string& protocols, const std::string& mode, std::size_t bound,
                 const std::string& out_file, const Output& out) {
  const auto bundle = io::protocols_from_json(io::read_json(protocols));
  GenerationMode m;
  if (mode == "bounded")
    m = GenerationMode::bounded(bound);
  else if (mode != "exact")
    throw ParseError("unknown generation mode '" + mode + "'");
  const auto build = build_strategy_system(bundle.system, bundle.low, bundle.highs, m,
                                           bundle.space);
  const auto j = io::to_json(build.strategies);
  if (!out_file.empty()) io::write_json(out_file, j);
  if (out.as_json) {
    std::cout << json{{"injective", build.injective}, {"strategies", j}}.dump(2) << "\n";
  } else {
    for (const auto& [name, s] : build.strategies.families())
      std::cout << name << ": " << to_string(s) << "\n";
    std::cout << "injective: " << (build.injective ? "yes" : "no") << "\n";
  }
  return kHolds;
}

template <class Sys>
std::vector<Sys> systems_from(const json& j, Sys (*parse)(const json&)) {
  std::vector<Sys> out;
  for (const auto& s : j.at("systems")) out.push_back(parse(s));
  return out;
}

template <class Sys>
int report_q(const std::vector<Sys>& target, const std::vector<Sys>& universe, const Output& out) {
  const auto q = zl_q_search(target, universe);
  json j{{"found", q.has_value()}};
  if (q) {
    json sets = json::array();
    for (const auto& set : *q->accepted()) {
      json members = json::array();
      for (const auto& t : set) members.push_back(to_string(t));
      sets.push_back(std::move(members));
    }
    j["accepted"] = std::move(sets);
  }
  if (out.as_json) {
    std::cout << j.dump(2) << "\n";
  } else if (!q) {
    std::cout << "no Q realizes the target over the universe\n";
  } else {
    std::cout << "Q accepts exactly:\n";
    for (const auto& set : *q->accepted()) {
      std::cout << "  {";
      for (std::size_t i = 0; i < set.size(); ++i) std::cout << (i ? ", " : "") << to_string(set[i]);
      std::cout << "}\n";
    }
  }
  return q ? kHolds : kFails;
}

int run_q_search(const std::string& target_file, const std::string& universe_file,
                 const Output& out) {
  const auto target = io::read_json(target_file);
  const auto universe = io::read_json(universe_file);
  try {
    const bool async = !target.at("systems").empty() && target["systems"][0].contains("events");
    if (async)
      return report_q(systems_from<AsyncSystem>(target, io::async_system_from_json),
                      systems_from<AsyncSystem>(universe, io::async_system_from_json), out);
    return report_q(systems_from<System>(target, io::system_from_json),
                    systems_from<System>(universe, io::system_from_json), out);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad system list: ") + e.what());
  }
}

int run_verify(const std::vector<std::string>& only, bool timing, const VerifyOptions& options,
               const Output& out) {
  std::vector<ResultId> ids;
  for (const auto& item : only) {
    std::stringstream in(item);
    std::string name;
    while (std::getline(in, name, ','))
      if (!name.empty()) ids.push_back(parse_result_id(name));
  }
  const auto report = verify_paper(ids, options);
  if (out.as_json)
    std::cout << report.to_json(timing).dump(2) << "\n";
  else
    std::cout << report.to_text(timing);
  return report.all_pass() ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security properties of trace systems and their closure functions"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Machine-readable output");

  std::string property, system_file;
  auto* check = app.add_subcommand("check", "Decide a property of a system");
  check->add_option("--property", property, "sep, gni, rgni, dgni, nos or psp")
      ->required()
      ->check(CLI::IsMember({"sep", "gni", "rgni", "dgni", "nos", "psp"}, CLI::ignore_case));
  check->add_option("--system", system_file, "System JSON file")->required();
  check->add_flag("--json", out.as_json, "Machine-readable output");

  std::string type;
  std::vector<std::string> gen_conj;
  auto* closure = app.add_subcommand("closure", "Check closure under a SIF type or pair");
  auto* type_opt = closure->add_option("--type", type, "Type literal such as 1:2/0:2");
  auto* conj_opt = closure->add_option("--gen-conj", gen_conj, "Two type literals")->expected(2);
  type_opt->excludes(conj_opt);
  closure->add_option("--system", system_file, "System JSON file")->required();
  closure->add_flag("--json", out.as_json, "Machine-readable output");

  EnumerationParams params;
  auto* represent = app.add_subcommand("represent", "Compare a property with a type over an enumeration");
  represent->add_option("--property", property, "sep, gni, rgni or dgni")->required();
  represent->add_option("--type", type, "Type literal")->required();
  represent->add_option("--max-prefix", params.max_prefix, "Longest prefix")->capture_default_str();
  represent->add_option("--max-cycle", params.max_cycle, "Longest cycle")->capture_default_str();
  represent->add_option("--alphabet-sizes", params.alphabet_sizes, "Sizes of hi li ho lo")
      ->expected(4);
  represent->add_option("--cap", params.cap, "Largest enumeration")->capture_default_str();
  represent->add_flag("--json", out.as_json, "Machine-readable output");

  std::vector<std::string> pool;
  auto* refute = app.add_subcommand("refute", "Refute every type for a property");
  refute->add_option("--property", property, "sep, gni, rgni, dgni or nos")->required();
  refute->add_option("--pool", pool, "System files")->required();
  refute->add_flag("--json", out.as_json, "Machine-readable output");

  std::string protocols, mode = "exact", out_file;
  std::size_t bound = 4;
  auto* strategies = app.add_subcommand("strategies", "Strategy systems");
  strategies->require_subcommand(1);
  auto* generate = strategies->add_subcommand("generate", "Generate Sigma_H from protocols");
  generate->add_option("--protocols", protocols, "Protocol JSON file")->required();
  generate->add_option("--mode", mode, "exact or bounded")
      ->check(CLI::IsMember({"exact", "bounded"}))
      ->capture_default_str();
  generate->add_option("--bound", bound, "Run length in bounded mode")->capture_default_str();
  generate->add_option("--out", out_file, "Write the strategy system here");
  generate->add_flag("--json", out.as_json, "Machine-readable output");

  std::string target_file, universe_file;
  auto* zl = app.add_subcommand("zl", "Zero-leakage properties");
  zl->require_subcommand(1);
  auto* qsearch = zl->add_subcommand("q-search", "Search for a Q realizing a set of systems");
  qsearch->add_option("--target", target_file, "JSON {\"systems\": [...]}")->required();
  qsearch->add_option("--universe", universe_file, "JSON {\"systems\": [...]}")->required();
  qsearch->add_flag("--json", out.as_json, "Machine-readable output");

  std::vector<std::string> only;
  bool timing = false;
  VerifyOptions options;
  auto* verify = app.add_subcommand("verify-paper", "Reproduce every result");
  verify->add_option("--only", only, "Comma-separated result ids");
  verify->add_flag("--timing", timing, "Include runtimes");
  verify->add_option("--fixtures", options.fixtures, "Fixture directory");
  verify->add_option("--corpus-size", options.corpus_size)->capture_default_str();
  verify->add_option("--seed", options.seed)->capture_default_str();
  verify->add_option("--random-cases", options.random_cases)->capture_default_str();
  verify->add_flag("--json", out.as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    for (auto& c : property) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (*check) return run_check(property, system_file, out);
    if (*closure) {
      if (type.empty() && gen_conj.empty()) throw ParseError("closure needs --type or --gen-conj");
      return run_closure(type, gen_conj, system_file, out);
    }
    if (*represent) return run_represent(property, type, params, out);
    if (*refute) return run_refute(property, pool, out);
    if (*generate) return run_generate(protocols, mode, bound, out_file, out);
    if (*qsearch) return run_q_search(target_file, universe_file, out);
    if (*verify) return run_verify(only, timing, options, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
