#include "siflab/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "siflab/corpus.hpp"
#include "siflab/enumerate.hpp"
#include "siflab/gen_sifs.hpp"
#include "siflab/io.hpp"
#include "siflab/sif_families.hpp"
#include "siflab/sif_types.hpp"
#include "siflab/strategy.hpp"
#include "siflab/zl_psp.hpp"

#ifndef SIFLAB_FIXTURES_DIR
#define SIFLAB_FIXTURES_DIR "fixtures"
#endif

namespace siflab {

namespace {

struct IdName {
  ResultId id;
  const char* name;
};

constexpr IdName kIds[] = {
    {ResultId::Ex1, "EX1"},
    {ResultId::Ex2, "EX2"},
    {ResultId::Ex3, "EX3"},
    {ResultId::Prop1, "PROP1"},
    {ResultId::Prop2, "PROP2"},
    {ResultId::Thm1, "THM1"},
    {ResultId::Thm2, "THM2"},
    {ResultId::CorConj, "COR-CONJ"},
    {ResultId::Thm3, "THM3"},
    {ResultId::Thm4, "THM4"},
    {ResultId::PropDisj, "PROP-DISJ"},
    {ResultId::Thm5, "THM5"},
    {ResultId::PropGenConj, "PROP-GENCONJ"},
    {ResultId::CorDgni, "COR-DGNI"},
    {ResultId::PropZlDisj, "PROP-ZL-DISJ"},
    {ResultId::PropNosZl, "PROP-NOS-ZL"},
    {ResultId::ThmZlConj, "THM-ZL-CONJ"},
    {ResultId::PropPspSif, "PROP-PSP-SIF"},
    {ResultId::LemSwap, "LEM-SWAP"},
    {ResultId::LemAllSys, "LEM-ALLSYS"},
};

std::string str(bool b) { return b ? "true" : "false"; }

// The shared inputs of one verification run, loaded lazily.
class Context {
 public:
  explicit Context(const VerifyOptions& opt) : opt_(opt), rng_(opt.seed) {}

  const VerifyOptions& options() const { return opt_; }
  std::mt19937_64& rng() { return rng_; }

  System system(const char* name) const { return io::load_system(opt_.fixtures / name); }
  StrategySystem strategies(const char* name) const {
    return io::load_strategy_system(opt_.fixtures / name);
  }
  AsyncSystem async(const char* name) const { return io::load_async_system(opt_.fixtures / name); }

  const std::vector<StrategySystem>& corpus() {
    if (!corpus_) {
      StrategyCorpusParams params;
      params.count = opt_.corpus_size;
      params.seed = opt_.seed;
      corpus_ = strategy_corpus(params);
    }
    return *corpus_;
  }

  /// A strategy system over some subset of protocols, paired with the full
  /// protocol set it was drawn from.
  struct Restricted {
    std::string label;
    StrategySystem system;
    std::shared_ptr<const StrategySystem> full;
  };

  /// Every corpus system, each of its protocol subsets, and the two NOS
  /// fixtures.
  const std::vector<Restricted>& nos_universe() {
    if (!nos_universe_) {
      std::vector<Restricted> out;
      auto add_with_subsets = [&](const std::string& label, const StrategySystem& ss) {
        auto full = std::make_shared<const StrategySystem>(ss);
        std::vector<std::string> names;
        for (const auto& [n, s] : ss.families()) names.push_back(n);
        for (std::uint32_t mask = 1; mask < (1U << names.size()); ++mask) {
          std::vector<std::string> pick;
          for (std::size_t i = 0; i < names.size(); ++i)
            if ((mask >> i) & 1U) pick.push_back(names[i]);
          std::string l = label;
          if (pick.size() != names.size()) {
            l += "|";
            for (std::size_t i = 0; i < pick.size(); ++i) l += (i ? "," : "") + pick[i];
          }
          out.push_back({l, ss.restrict_to(pick), full});
        }
      };
      add_with_subsets("sigma_nos.json", strategies("sigma_nos.json"));
      add_with_subsets("sigma_nos_false.json", strategies("sigma_nos_false.json"));
      const auto& c = corpus();
      for (std::size_t i = 0; i < c.size(); ++i)
        add_with_subsets("corpus#" + std::to_string(i), c[i]);
      nos_universe_ = std::move(out);
    }
    return *nos_universe_;
  }

  const SystemEnumeration& period1() {
    if (!period1_) period1_.emplace(period1_binary_systems());
    return *period1_;
  }

 private:
  VerifyOptions opt_;
  std::mt19937_64 rng_;
  std::optional<std::vector<StrategySystem>> corpus_;
  std::optional<std::vector<Restricted>> nos_universe_;
  std::optional<SystemEnumeration> period1_;
};

using Evidence = std::vector<std::string>;

// --- examples ---------------------------------------------------------------

bool ex1(Context& ctx, Evidence& ev) {
  auto s = ctx.system("sigma_dgni.json");
  const bool dgni = check_property(PropertyKind::Dgni, s);
  const bool sep = check_property(PropertyKind::Sep, s);
  ev.push_back("sigma_dgni.json: " + std::to_string(s.size()) + " traces, DGNI=" + str(dgni) +
               ", SEP=" + str(sep));
  return s.size() == 15 && dgni && !sep;
}

bool ex2(Context& ctx, Evidence& ev) {
  auto s = ctx.system("sigma_gni.json");
  const bool gni = check_property(PropertyKind::Gni, s);
  const bool dgni = check_property(PropertyKind::Dgni, s);
  ev.push_back("sigma_gni.json: " + std::to_string(s.size()) + " traces, GNI=" + str(gni) +
               ", DGNI=" + str(dgni));
  return s.size() == 4 && gni && !dgni;
}

bool ex3(Context& ctx, Evidence& ev) {
  auto bundle = io::protocols_from_json(io::read_json(ctx.options().fixtures / "ex3_protocols.json"));
  auto build = build_strategy_system(bundle.system, bundle.low, bundle.highs,
                                     GenerationMode::exact(), bundle.space);
  const auto& u = build.strategies.union_system();
  const auto expected = ctx.strategies("sigma_nos.json");
  const bool same = u == expected.union_system();
  const bool nos = build.injective && check_nos(build.strategies);
  const bool sep = check_property(PropertyKind::Sep, u);
  ev.push_back("generated from ex3_protocols.json: " + to_string(u));
  ev.push_back("matches sigma_nos.json: " + str(same) + ", NOS=" + str(nos) + ", SEP=" + str(sep));
  return same && u.size() == 2 && nos && !sep;
}

// --- properties and their types ---------------------------------------------

bool prop1(Context& ctx, Evidence& ev) {
  std::size_t sep = 0, dgni = 0, gni = 0, violations = 0;
  std::optional<std::string> first_bad;
  ctx.period1().for_each([&](const System& s) {
    const bool a = check_property(PropertyKind::Sep, s);
    const bool b = check_property(PropertyKind::Dgni, s);
    const bool c = check_property(PropertyKind::Gni, s);
    sep += a;
    dgni += b;
    gni += c;
    if ((a && !b) || (b && !c)) {
      ++violations;
      if (!first_bad) first_bad = to_string(s);
    }
  });
  ev.push_back(std::to_string(ctx.period1().size()) + " period-1 systems: SEP " +
               std::to_string(sep) + ", DGNI " + std::to_string(dgni) + ", GNI " +
               std::to_string(gni) + ", implication violations " + std::to_string(violations));

  std::size_t sep_corpus = 0, nos_violations = 0, step_checks = 0, step_violations = 0;
  const auto low = ComponentMask::low();
  const auto high = ComponentMask::high();
  for (const auto& r : ctx.nos_universe()) {
    const auto& u = r.system.union_system();
    const bool s = check_property(PropertyKind::Sep, u);
    if (s) {
      ++sep_corpus;
      if (!check_nos(r.system)) {
        ++nos_violations;
        if (!first_bad) first_bad = r.label;
      }
    }
    // a trace of the union whose high view is that of a Sigma_H trace is in Sigma_H
    for (const auto& [name, fam] : r.system.families())
      for (const auto& tau : fam)
        for (const auto& t : u) {
          if (project(t, high) != project(tau, high)) continue;
          ++step_checks;
          if (!fam.contains(t)) {
            ++step_violations;
            if (!first_bad) first_bad = r.label + " protocol " + name;
          }
        }
    (void)low;
  }
  ev.push_back(std::to_string(ctx.nos_universe().size()) + " strategy systems, " +
               std::to_string(sep_corpus) + " separable, SEP=>NOS violations " +
               std::to_string(nos_violations));
  ev.push_back("high-view step: " + std::to_string(step_checks) + " checks, " +
               std::to_string(step_violations) + " violations");
  if (first_bad) ev.push_back("first offender: " + *first_bad);
  return violations == 0 && nos_violations == 0 && step_violations == 0 && sep_corpus > 0;
}

bool represents_exhaustively(Context& ctx, const SifType& t, PropertyKind k, Evidence& ev) {
  std::size_t mismatches = 0;
  std::optional<std::string> first;
  ctx.period1().for_each([&](const System& s) {
    if (check_property(k, s) != closed_under_type(s, t)) {
      ++mismatches;
      if (!first) first = to_string(s);
    }
  });
  ev.push_back(std::string(property_name(k)) + " vs " + to_string(t) + ": " +
               std::to_string(mismatches) + " discrepancies over " +
               std::to_string(ctx.period1().size()) + " systems");
  if (first) ev.push_back("first discrepancy: " + *first);
  return mismatches == 0;
}

bool prop2(Context& ctx, Evidence& ev) {
  bool ok = represents_exhaustively(ctx, parse_type("1:2/1:2"), PropertyKind::Sep, ev);
  ok = represents_exhaustively(ctx, parse_type("1:2/0:2"), PropertyKind::Gni, ev) && ok;
  return ok;
}

// --- type refutations ---------------------------------------------------------

void describe(const RefutationReport& r, Evidence& ev) {
  ev.push_back(std::to_string(r.refuted_count()) + "/81 types refuted");
  for (const auto& v : r.verdicts) {
    if (v.refuted())
      ev.push_back(to_string(v.type) + ": " + *v.witness + " (" + direction_name(v.direction) +
                   ")");
    else
      ev.push_back(to_string(v.type) + ": UNREFUTED");
  }
  if (!r.extension_used.empty()) {
    std::string used = "extension systems used:";
    for (const auto& l : r.extension_used) used += " " + l;
    ev.push_back(used);
  }
}

RefutationReport refute_with_fixtures(Context& ctx, const std::function<bool(const System&)>& p,
                                      const std::vector<const char*>& names) {
  std::vector<RefutationCandidate> pool;
  for (const char* n : names) {
    auto s = ctx.system(n);
    const bool holds = p(s);
    pool.push_back({n, std::move(s), holds});
  }
  return refute_all_types(pool);
}

bool thm1(Context& ctx, Evidence& ev) {
  std::vector<RefutationCandidate> pool;
  for (const char* n : {"sigma_nos.json", "sigma_nos_false.json"}) {
    auto ss = ctx.strategies(n);
    pool.push_back({n, ss.union_system(), check_nos(ss)});
  }
  const auto& universe = ctx.nos_universe();
  CandidateSource extension = [&](std::size_t i) -> std::optional<RefutationCandidate> {
    if (i >= universe.size()) return std::nullopt;
    const auto& r = universe[i];
    return RefutationCandidate{r.label, r.system.union_system(), check_nos(r.system)};
  };
  auto report = refute_all_types(pool, extension);
  describe(report, ev);
  return report.all_refuted();
}

bool dgni_pred(const System& s) { return check_property(PropertyKind::Dgni, s); }

bool thm2(Context& ctx, Evidence& ev) {
  auto report = refute_with_fixtures(ctx, dgni_pred,
                                     {"sigma_dgni.json", "sigma_not_gni.json",
                                      "sigma_gni_not_dgni.json", "sigma_not_gni_prime.json"});
  describe(report, ev);
  return report.all_refuted();
}

bool cor_conj(Context& ctx, Evidence& ev) {
  bool ok = represents_exhaustively(ctx, gni_type(), PropertyKind::Gni, ev);
  ok = represents_exhaustively(ctx, rgni_type(), PropertyKind::Rgni, ev) && ok;
  auto report = refute_with_fixtures(ctx, dgni_pred,
                                     {"sigma_dgni.json", "sigma_not_gni.json",
                                      "sigma_gni_not_dgni.json", "sigma_not_gni_prime.json"});
  ev.push_back("DGNI = GNI and RGNI: " + std::to_string(report.refuted_count()) +
               "/81 types refuted");
  return ok && report.all_refuted();
}

bool sep_or_t122(const System& s) {
  return check_property(PropertyKind::Sep, s) || closed_under_type(s, parse_type("1:2/2:2"));
}

bool thm3(Context& ctx, Evidence& ev) {
  std::vector<System> pool;
  std::vector<std::string> labels;
  for (const char* n : {"sigma_sep.json", "sigma_gni_not_dgni.json", "sigma_not_gni.json",
                        "sigma_not_gni_prime.json", "sigma_mix.json"}) {
    pool.push_back(ctx.system(n));
    labels.push_back(n);
  }
  // sigma_sep.json is itself closed under 1:2/2:2, so that type and its swap
  // need a separable system from the enumeration
  auto report = refute_all_types(sep_or_t122, pool, labels, &ctx.period1());
  ev.push_back("sigma_sep.json closed under 1:2/2:2: " +
               str(closed_under_type(pool[0], parse_type("1:2/2:2"))));
  describe(report, ev);
  return report.all_refuted();
}

// --- SIF families ------------------------------------------------------------

bool thm4(Context& ctx, Evidence& ev) {
  std::size_t checked = 0, nos_false = 0, mismatches = 0;
  std::optional<std::string> first;
  std::map<const StrategySystem*, SifFamily> families;
  for (const auto& r : ctx.nos_universe()) {
    auto it = families.find(r.full.get());
    if (it == families.end()) it = families.emplace(r.full.get(), nos_family(r.full)).first;
    const bool nos = check_nos(r.system);
    const bool closed = closed_under_family(r.system.union_system(), it->second);
    ++checked;
    nos_false += !nos;
    if (nos != closed) {
      ++mismatches;
      if (!first) first = r.label;
    }
  }
  ev.push_back(std::to_string(checked) + " strategy systems (" + std::to_string(nos_false) +
               " without NOS), " + std::to_string(mismatches) + " mismatches");
  if (first) ev.push_back("first mismatch: " + *first);
  return mismatches == 0 && nos_false > 0 && checked >= 100;
}

// distinct nonempty period-1 systems
std::vector<System> random_collection(std::mt19937_64& rng, std::size_t n) {
  const auto traces = period1_binary_traces();
  std::vector<System> out;
  while (out.size() < n) {
    const int percent = 10 + static_cast<int>(rng() % 40);
    std::vector<LassoTrace> members;
    for (const auto& t : traces)
      if (static_cast<int>(rng() % 100) < percent) members.push_back(t);
    if (members.empty()) continue;
    auto s = System::make(binary_space(), std::move(members));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

// Three two-trace systems and their union. Every pair of the union lies in
// one of the smaller systems, so a family closing all three also closes the
// union.
std::vector<System> covered_triangle() {
  const auto t = period1_binary_traces();
  auto make = [](std::vector<LassoTrace> ts) { return System::make(binary_space(), std::move(ts)); };
  return {make({t[0], t[5]}), make({t[5], t[15]}), make({t[0], t[15]}), make({t[0], t[5], t[15]})};
}

struct ReadingTally {
  std::size_t checks = 0;
  std::size_t per_pair_failures = 0;
  std::size_t covered = 0;  // failures no SIF family can avoid
  std::size_t one_member_failures = 0;
  std::optional<std::string> first;

  void add(const System& s, bool expected, const SifFamily& fam, std::span<const System> accepted) {
    ++checks;
    if (closed_under_one_member(s, fam) != expected) ++one_member_failures;
    if (closed_under_family(s, fam) == expected) return;
    ++per_pair_failures;
    if (!expected && pairwise_covered(s, accepted)) ++covered;
    if (!first) first = to_string(s);
  }

  void describe(Evidence& ev) const {
    ev.push_back(std::to_string(checks) + " (property, system) checks; per-pair closure: " +
                 std::to_string(per_pair_failures) + " failures, " + std::to_string(covered) +
                 " of them on systems whose every pair lies in an accepted subsystem");
    ev.push_back("single-member closure: " + std::to_string(one_member_failures) + " failures");
    if (first) ev.push_back("first per-pair failure: " + *first);
  }
};

// The triangle case for a union of families: S1 = {xy, yz}, S2 = {xz}.
void triangle_disjunction(ReadingTally& tally, Evidence& ev) {
  const auto tri = covered_triangle();
  SifFamily f1{{zigzag_sif(tri[0], tri[0].traces()), zigzag_sif(tri[1], tri[1].traces())}};
  SifFamily f2{{zigzag_sif(tri[2], tri[2].traces())}};
  const auto both = family_union(f1, f2);
  const bool s1_ok = !closed_under_family(tri[3], f1) && closed_under_family(tri[0], f1) &&
                     closed_under_family(tri[1], f1) && !closed_under_family(tri[2], f1);
  const bool s2_ok = closed_under_family(tri[2], f2) && !closed_under_family(tri[3], f2);
  const std::vector<System> accepted{tri[0], tri[1], tri[2]};
  for (std::size_t i = 0; i < tri.size(); ++i) tally.add(tri[i], i < 3, both, accepted);
  ev.push_back("triangle " + to_string(tri[3]) + ": F1 represents {xy,yz} " + str(s1_ok) +
               ", F2 represents {xz} " + str(s2_ok) + ", union closed under F1 u F2 " +
               str(closed_under_family(tri[3], both)));
}

bool prop_disj(Context& ctx, Evidence& ev) {
  auto& rng = ctx.rng();
  ReadingTally tally;
  std::size_t rounds = 0;
  for (; rounds < 50; ++rounds) {
    auto universe = random_collection(rng, 10);
    std::vector<bool> in(10);
    std::vector<System> accepted;
    SifFamily f1, f2;
    for (std::size_t i = 0; i < 10; ++i) {
      const bool a = rng() % 3 == 0;
      const bool b = rng() % 3 == 0;
      if (a) f1.members.push_back(zigzag_sif(universe[i], universe[i].traces()));
      if (b) f2.members.push_back(zigzag_sif(universe[i], universe[i].traces()));
      in[i] = a || b;
      if (in[i]) accepted.push_back(universe[i]);
    }
    const auto both = family_union(f1, f2);
    for (std::size_t i = 0; i < 10; ++i) tally.add(universe[i], in[i], both, accepted);
  }
  ev.push_back(std::to_string(rounds) + " random universes of 10 systems plus the triangle case");
  triangle_disjunction(tally, ev);
  tally.describe(ev);
  return tally.per_pair_failures == 0;
}

// Shrinks the core greedily while it still separates `s` from its proper
// subsystems in the collection.
std::vector<LassoTrace> small_core(std::span<const System> coll, const System& s) {
  std::vector<LassoTrace> core = s.traces();
  for (std::size_t i = core.size(); i-- > 0 && core.size() > 1;) {
    auto trial = core;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_generating_core(coll, s, trial)) core = std::move(trial);
  }
  return core;
}

bool thm5(Context& ctx, Evidence& ev) {
  auto& rng = ctx.rng();
  std::size_t collections = 0, uniqueness_failures = 0, subsets = 0;
  std::optional<std::string> first_unique;
  ReadingTally tally;
  std::vector<std::vector<System>> all;
  for (; collections < 40; ++collections) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<System> coll = random_collection(rng, n);
    // make nested members likely so that small cores matter
    if (rng() % 2) {
      auto sub = coll[0].traces();
      if (sub.size() > 1) {
        sub.pop_back();
        auto s = System::make(binary_space(), sub);
        if (std::find(coll.begin(), coll.end(), s) == coll.end()) coll.back() = s;
      }
    }
    all.push_back(std::move(coll));
  }
  all.push_back(covered_triangle());
  for (const auto& coll : all) {
    for (bool minimal : {false, true}) {
      std::vector<Sif> fs;
      for (const auto& s : coll) {
        auto core = minimal ? small_core(coll, s) : s.traces();
        if (!is_generating_core(coll, s, core)) {
          ++uniqueness_failures;
          if (!first_unique) first_unique = "core does not generate " + to_string(s);
        }
        fs.push_back(zigzag_sif(s, std::move(core)));
      }
      for (std::size_t i = 0; i < coll.size(); ++i)
        for (std::size_t j = 0; j < coll.size(); ++j)
          if (closed_under_family(coll[j], SifFamily{{fs[i]}}) != (i == j)) {
            ++uniqueness_failures;
            if (!first_unique) first_unique = to_string(coll[j]) + " under f for " + to_string(coll[i]);
          }
      for (std::uint32_t mask = 0; mask < (1U << coll.size()); ++mask) {
        SifFamily fam;
        std::vector<System> accepted;
        for (std::size_t i = 0; i < coll.size(); ++i)
          if ((mask >> i) & 1U) {
            fam.members.push_back(fs[i]);
            accepted.push_back(coll[i]);
          }
        ++subsets;
        for (std::size_t j = 0; j < coll.size(); ++j)
          tally.add(coll[j], (mask >> j) & 1U, fam, accepted);
      }
    }
  }
  ev.push_back(std::to_string(collections) + " random collections of 2..8 systems plus the triangle " +
               to_string(all.back()[3]) + ", full and minimized cores");
  ev.push_back("uniqueness of f_Sigma: " + std::to_string(uniqueness_failures) + " failures");
  if (first_unique) ev.push_back("first uniqueness failure: " + *first_unique);
  ev.push_back(std::to_string(subsets) + " subsets S represented by {f_Sigma : Sigma in S}");
  tally.describe(ev);
  return uniqueness_failures == 0 && tally.per_pair_failures == 0;
}

ExtensionalSif random_table(std::mt19937_64& rng, const std::vector<LassoTrace>& traces) {
  ExtensionalSif f;
  const int percent = 60 + static_cast<int>(rng() % 40);
  for (const auto& a : traces)
    for (const auto& b : traces)
      if (static_cast<int>(rng() % 100) < percent) f.table[{a, b}] = traces[rng() % traces.size()];
  return f;
}

bool prop_genconj(Context& ctx, Evidence& ev) {
  auto& rng = ctx.rng();
  const auto all = period1_binary_traces();
  std::size_t cases = 0, mismatches = 0, lift_mismatches = 0;
  for (; cases < ctx.options().random_cases; ++cases) {
    std::vector<LassoTrace> pool;
    for (const auto& t : all)
      if (rng() % 3 == 0) pool.push_back(t);
    if (pool.empty()) pool.push_back(all[rng() % all.size()]);
    SifFamily f1, f2;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) f1.members.push_back(Sif(random_table(rng, pool)));
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) f2.members.push_back(Sif(random_table(rng, pool)));
    std::vector<LassoTrace> members;
    for (const auto& t : pool)
      if (rng() % 4) members.push_back(t);
    auto s = System::make(binary_space(), members);
    const bool c1 = closed_under_family(s, f1);
    const bool c2 = closed_under_family(s, f2);
    if (closed_under_gen(s, conj_family(f1, f2)) != (c1 && c2)) ++mismatches;
    if (closed_under_gen(s, lift(f1)) != c1) ++lift_mismatches;
  }
  // symbolic type conjunctions against closure under each type
  const auto types = enumerate_types();
  std::size_t type_cases = 0, type_mismatches = 0;
  for (; type_cases < ctx.options().random_cases; ++type_cases) {
    const auto& t1 = types[rng() % types.size()];
    const auto& t2 = types[rng() % types.size()];
    std::vector<LassoTrace> members;
    for (const auto& t : all)
      if (rng() % 2) members.push_back(t);
    auto s = System::make(binary_space(), members);
    if (closed_under_gen(s, conj_family(t1, t2)) !=
        (closed_under_type(s, t1) && closed_under_type(s, t2)))
      ++type_mismatches;
  }
  ev.push_back(std::to_string(cases) + " extensional cases: " + std::to_string(mismatches) +
               " conjunction mismatches, " + std::to_string(lift_mismatches) + " lifting mismatches");
  ev.push_back(std::to_string(type_cases) + " type-pair cases: " +
               std::to_string(type_mismatches) + " mismatches");
  return mismatches == 0 && lift_mismatches == 0 && type_mismatches == 0;
}

bool cor_dgni(Context& ctx, Evidence& ev) {
  bool ok = represents_exhaustively(ctx, rgni_type(), PropertyKind::Rgni, ev);
  const auto fam = conj_family(gni_type(), rgni_type());
  std::size_t mismatches = 0;
  std::optional<std::string> first;
  ctx.period1().for_each([&](const System& s) {
    if (closed_under_gen(s, fam) != check_property(PropertyKind::Dgni, s)) {
      ++mismatches;
      if (!first) first = to_string(s);
    }
  });
  ev.push_back("DGNI vs [" + to_string(gni_type()) + ", " + to_string(rgni_type()) + "]: " +
               std::to_string(mismatches) + " discrepancies over " +
               std::to_string(ctx.period1().size()) + " systems");
  if (first) ev.push_back("first discrepancy: " + *first);
  ok = ok && closed_under_gen(ctx.system("sigma_dgni.json"), fam) &&
       !closed_under_gen(ctx.system("sigma_gni.json"), fam);
  return ok && mismatches == 0;
}

// --- zero leakage and PSP -----------------------------------------------------

template <class Sys>
std::vector<Sys> nonempty_subsystems(const std::function<Sys(std::vector<std::size_t>)>& make,
                                     std::size_t n) {
  std::vector<Sys> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) pick.push_back(i);
    out.push_back(make(pick));
  }
  return out;
}

template <class Sys>
bool realizes(const ZlPredicate<detail::TraceOf<Sys>>& q, const std::vector<Sys>& target,
              const std::vector<Sys>& universe) {
  return std::all_of(universe.begin(), universe.end(), [&](const Sys& s) {
    const bool in = std::find(target.begin(), target.end(), s) != target.end();
    return zl_check(s, q) == in;
  });
}

bool prop_zl_disj(Context& ctx, Evidence& ev) {
  bool ok = true;
  {
    auto base = ctx.system("zl_two_traces.json");
    auto universe = nonempty_subsystems<System>(
        [&](std::vector<std::size_t> pick) {
          std::vector<LassoTrace> ts;
          for (auto i : pick) ts.push_back(base[i]);
          return System::make(base.space(), ts);
        },
        base.size());
    std::vector<System> singles;
    for (const auto& s : universe)
      if (s.size() == 1) singles.push_back(s);
    const bool none = !zl_q_search(singles, universe).has_value();
    ok = ok && none;
    ev.push_back("synchronous: Q for {{s0},{s1}} over " + std::to_string(universe.size()) +
                 " systems: " + (none ? "none" : "found"));
    for (const auto& s : singles) {
      auto q = zl_q_search(std::vector<System>{s}, universe);
      const bool good = q && realizes(*q, std::vector<System>{s}, universe);
      ok = ok && good;
      ev.push_back("Q for {" + to_string(s) + "}: " + (good ? "found and exact" : "FAILED"));
    }
  }
  {
    std::vector<Event> events{{"h", Level::High}, {"l", Level::Low}};
    std::vector<EventTrace> traces{{"h"}, {"l"}};
    auto universe = nonempty_subsystems<AsyncSystem>(
        [&](std::vector<std::size_t> pick) {
          std::vector<EventTrace> ts;
          for (auto i : pick) ts.push_back(traces[i]);
          return AsyncSystem::make(events, ts);
        },
        traces.size());
    std::vector<AsyncSystem> singles{universe[0], universe[1]};
    const bool none = !zl_q_search(singles, universe).has_value();
    ok = ok && none;
    ev.push_back(std::string("asynchronous: Q for {{<h>},{<l>}}: ") + (none ? "none" : "found"));
  }
  // every Q the search returns realizes its target exactly
  {
    auto base = period1_binary_traces();
    base.resize(4);
    auto universe = nonempty_subsystems<System>(
        [&](std::vector<std::size_t> pick) {
          std::vector<LassoTrace> ts;
          for (auto i : pick) ts.push_back(base[i]);
          return System::make(binary_space(), ts);
        },
        base.size());
    std::size_t found = 0, none = 0, wrong = 0;
    for (std::uint32_t mask = 0; mask < (1U << universe.size()); mask += 7) {
      std::vector<System> target;
      for (std::size_t i = 0; i < universe.size(); ++i)
        if ((mask >> i) & 1U) target.push_back(universe[i]);
      auto q = zl_q_search(target, universe);
      if (!q) {
        ++none;
        continue;
      }
      ++found;
      if (!realizes(*q, target, universe)) ++wrong;
    }
    ok = ok && wrong == 0;
    ev.push_back("target sweep over " + std::to_string(universe.size()) + " systems: " +
                 std::to_string(found) + " realizable, " + std::to_string(none) + " not, " +
                 std::to_string(wrong) + " wrong");
  }
  return ok;
}

bool prop_nos_zl(Context& ctx, Evidence& ev) {
  std::size_t checked = 0, mismatches = 0;
  std::optional<std::string> first;
  for (const auto& r : ctx.nos_universe()) {
    ++checked;
    if (zl_check(r.system.union_system(), nos_predicate(r.system)) != check_nos(r.system)) {
      ++mismatches;
      if (!first) first = r.label;
    }
  }
  ev.push_back(std::to_string(checked) + " strategy systems, " + std::to_string(mismatches) +
               " mismatches between the NOS predicate and NOS");
  if (first) ev.push_back("first mismatch: " + *first);
  return mismatches == 0;
}

bool thm_zl_conj(Context& ctx, Evidence& ev) {
  auto& rng = ctx.rng();
  const auto all = period1_binary_traces();
  std::size_t cases = 0, mismatches = 0, held = 0;
  for (; cases < ctx.options().random_cases; ++cases) {
    std::vector<LassoTrace> members;
    for (const auto& t : all)
      if (rng() % 4 == 0) members.push_back(t);
    auto s = System::make(binary_space(), members);
    std::set<std::vector<LassoTrace>> a1, a2;
    for (const auto& t : s) {
      auto set = lles(t, s);
      if (rng() % 4) a1.insert(set);
      if (rng() % 4) a2.insert(set);
    }
    auto q1 = ZlPredicate<LassoTrace>::accepting(a1);
    auto q2 = ZlPredicate<LassoTrace>::accepting(a2);
    const bool both = zl_check(s, q1 && q2);
    held += both;
    if (both != (zl_check(s, q1) && zl_check(s, q2))) ++mismatches;
  }
  ev.push_back(std::to_string(cases) + " random (Q, Q', system) cases, " + std::to_string(held) +
               " satisfying the conjunction, " + std::to_string(mismatches) + " mismatches");
  return mismatches == 0;
}

// All event words over `names` up to `max_len`.
std::vector<EventTrace> event_words(const std::vector<std::string>& names, std::size_t max_len) {
  std::vector<EventTrace> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& e : names) {
        auto w = out[i];
        w.push_back(e);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

bool prop_psp_sif(Context& ctx, Evidence& ev) {
  std::size_t exhaustive = 0, sampled = 0, holds = 0, mismatches = 0;
  std::optional<std::string> first;
  auto& rng = ctx.rng();
  auto check = [&](const AsyncSystem& s) {
    const bool p = psp_check(s);
    holds += p;
    if (p != closed_under_psp_sif(s)) {
      ++mismatches;
      if (!first) {
        std::string d;
        for (const auto& t : s.traces()) d += to_string(t);
        first = d;
      }
    }
  };
  const std::uint64_t cap = ctx.options().psp_exhaustive_cap;
  // (events, longest trace); three events with length <= 2 still fit the cap
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 3}, {2, 3}, {3, 2}, {3, 3}};
  for (const auto& [n, max_len] : shapes) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    const auto words = event_words(names, max_len);
    // levels up to renaming: the first `highs` events are high
    for (std::size_t highs = 0; highs <= n; ++highs) {
      std::vector<Event> events;
      for (std::size_t i = 0; i < n; ++i)
        events.push_back({names[i], i < highs ? Level::High : Level::Low});
      const bool full = words.size() < 63 && ((std::uint64_t{1} << words.size()) - 1) <= cap;
      const std::uint64_t count = full ? (std::uint64_t{1} << words.size()) : cap;
      for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<EventTrace> ts;
        if (full) {
          for (std::size_t i = 0; i < words.size(); ++i)
            if ((k >> i) & 1U) ts.push_back(words[i]);
          ++exhaustive;
        } else {
          for (const auto& w : words)
            if (rng() % 6 == 0) ts.push_back(w);
          ++sampled;
        }
        check(AsyncSystem::make(events, std::move(ts)));
      }
    }
  }
  // larger instances
  std::size_t larger = 0;
  for (; larger < 500; ++larger) {
    std::vector<std::string> names{"a", "b", "c", "d"};
    std::vector<Event> events;
    for (const auto& nm : names) events.push_back({nm, rng() % 2 ? Level::High : Level::Low});
    std::set<EventTrace> ts;
    const auto words = event_words(names, 4);
    const std::size_t m = 1 + rng() % 10;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& w = words[rng() % words.size()];
      ts.insert(w);
      if (rng() % 2) {
        EventTrace lowp;
        for (std::size_t j = 0; j < w.size(); ++j)
          if (events[static_cast<std::size_t>(w[j][0] - 'a')].level == Level::Low)
            lowp.push_back(w[j]);
        ts.insert(lowp);
      }
    }
    check(AsyncSystem::make(events, {ts.begin(), ts.end()}));
  }
  ev.push_back(std::to_string(exhaustive) + " systems enumerated exhaustively, " +
               std::to_string(sampled) + " sampled (|E| <= 3, length <= 3), " +
               std::to_string(larger) + " larger random systems");
  ev.push_back(std::to_string(holds) + " satisfy PSP, " + std::to_string(mismatches) +
               " mismatches with closure under the PSP SIF");
  if (first) ev.push_back("first mismatch: " + *first);
  return mismatches == 0;
}

// --- type invariants ----------------------------------------------------------

bool lem_swap(Context& ctx, Evidence& ev) {
  const auto types = enumerate_types();
  std::size_t violations = 0, pairs = 0;
  std::optional<std::string> first;
  ctx.period1().for_each([&](const System& s) {
    const ComponentIndex index(s);
    std::array<bool, 81> closed{};
    for (const auto& t : types) closed[t.index()] = closed_under_type(index, t);
    for (const auto& t : types) {
      ++pairs;
      if (closed[t.index()] != closed[swap_type(t).index()]) {
        ++violations;
        if (!first) first = to_string(t) + " on " + to_string(s);
      }
    }
  });
  ev.push_back(std::to_string(pairs) + " (system, type) pairs, " + std::to_string(violations) +
               " swap violations");
  if (first) ev.push_back("first violation: " + *first);
  return violations == 0;
}

bool lem_allsys(Context& ctx, Evidence& ev) {
  const char* listed[] = {"0:0/0:0", "0:0/0:1", "0:0/1:0", "0:1/0:0", "1:0/0:0", "0:0/1:1",
                          "0:1/0:1", "1:0/0:1", "1:0/1:0", "0:1/1:0", "1:1/0:0", "1:1/1:0",
                          "1:1/0:1", "1:0/1:1", "0:1/1:1", "1:1/1:1"};
  std::set<SifType> types;
  for (const char* l : listed) {
    types.insert(parse_type(l));
    types.insert(swap_type(parse_type(l)));
  }
  auto trivial = trivially_closing_types();
  const bool same_list = std::set<SifType>(trivial.begin(), trivial.end()) == types;
  std::size_t violations = 0;
  std::optional<std::string> first;
  ctx.period1().for_each([&](const System& s) {
    const ComponentIndex index(s);
    for (const auto& t : types)
      if (!closed_under_type(index, t)) {
        ++violations;
        if (!first) first = to_string(t) + " on " + to_string(s);
      }
  });
  // the remaining types fail somewhere
  std::size_t nontrivial_closed_everywhere = 0;
  for (const auto& t : enumerate_types()) {
    if (types.count(t)) continue;
    bool everywhere = true;
    for (std::uint64_t i = 0; i < ctx.period1().size() && everywhere; ++i)
      everywhere = closed_under_type(ctx.period1()[i], t);
    nontrivial_closed_everywhere += everywhere;
  }
  ev.push_back(std::to_string(types.size()) + " types (16 listed plus swaps) over " +
               std::to_string(ctx.period1().size()) + " systems: " + std::to_string(violations) +
               " violations");
  ev.push_back("other types closing every system: " +
               std::to_string(nontrivial_closed_everywhere));
  if (first) ev.push_back("first violation: " + *first);
  return same_list && violations == 0 && nontrivial_closed_everywhere == 0;
}

using Procedure = bool (*)(Context&, Evidence&);

Procedure procedure(ResultId id) {
  switch (id) {
    case ResultId::Ex1: return ex1;
    case ResultId::Ex2: return ex2;
    case ResultId::Ex3: return ex3;
    case ResultId::Prop1: return prop1;
    case ResultId::Prop2: return prop2;
    case ResultId::Thm1: return thm1;
    case ResultId::Thm2: return thm2;
    case ResultId::CorConj: return cor_conj;
    case ResultId::Thm3: return thm3;
    case ResultId::Thm4: return thm4;
    case ResultId::PropDisj: return prop_disj;
    case ResultId::Thm5: return thm5;
    case ResultId::PropGenConj: return prop_genconj;
    case ResultId::CorDgni: return cor_dgni;
    case ResultId::PropZlDisj: return prop_zl_disj;
    case ResultId::PropNosZl: return prop_nos_zl;
    case ResultId::ThmZlConj: return thm_zl_conj;
    case ResultId::PropPspSif: return prop_psp_sif;
    case ResultId::LemSwap: return lem_swap;
    case ResultId::LemAllSys: return lem_allsys;
  }
  throw UnknownResultIdError("unknown result id");
}

}  // namespace

VerifyOptions::VerifyOptions() : fixtures(SIFLAB_FIXTURES_DIR) {}

const std::vector<ResultId>& all_result_ids() {
  static const std::vector<ResultId> ids = [] {
    std::vector<ResultId> out;
    for (const auto& e : kIds) out.push_back(e.id);
    return out;
  }();
  return ids;
}

const char* result_id_name(ResultId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  return "?";
}

ResultId parse_result_id(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& e : kIds)
    if (upper == e.name) return e.id;
  throw UnknownResultIdError("unknown result id '" + std::string(name) + "'");
}

bool VerificationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

nlohmann::json VerificationReport::to_json(bool with_runtime) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j{{"id", result_id_name(r.id)},
                     {"status", r.pass ? "PASS" : "FAIL"},
                     {"evidence", r.evidence}};
    if (with_runtime) j["seconds"] = r.seconds;
    out.push_back(std::move(j));
  }
  return {{"all_pass", all_pass()}, {"results", out}};
}

std::string VerificationReport::to_text(bool with_runtime) const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << result_id_name(r.id);
    if (with_runtime) out << " (" << r.seconds << " s)";
    out << "\n";
    for (const auto& e : r.evidence) out << "    " << e << "\n";
  }
  return out.str();
}

VerificationReport verify_paper(std::span<const ResultId> ids, const VerifyOptions& options) {
  if (ids.empty()) ids = all_result_ids();
  Context ctx(options);
  VerificationReport report;
  for (ResultId id : ids) {
    ResultOutcome r;
    r.id = id;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.pass = procedure(id)(ctx, r.evidence);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      r.pass = false;
      r.evidence.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace siflab
