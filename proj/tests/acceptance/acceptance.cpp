// Acceptance run: one PASS/FAIL line per criterion, each combining the
// library's own verification with checks against the independent oracles in
// support.hpp. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "siflab/corpus.hpp"
#include "siflab/enumerate.hpp"
#include "siflab/gen_sifs.hpp"
#include "siflab/sif_families.hpp"
#include "siflab/sif_types.hpp"
#include "siflab/verify.hpp"
#include "support.hpp"

using namespace siflab;
using namespace siflab::test;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::array<int, 4> slots_of(const SifType& t) {
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = static_cast<int>(t.slots[k]);
  return out;
}

std::vector<SifType> all_types() { return enumerate_types(); }

const SystemEnumeration& period1() {
  static const SystemEnumeration e = period1_binary_systems();
  return e;
}

bool dgni_oracle(const System& s) { return gni_oracle(s) && rgni_oracle(s); }

/// Folds a verification result into the outcome, echoing its evidence on
/// failure.
void fold(Outcome& out, const ResultOutcome& r) {
  out.require(r.pass, std::string(result_id_name(r.id)) + " verification");
  if (!r.pass)
    for (const auto& e : r.evidence) out.note(std::string(result_id_name(r.id)) + ": " + e);
}

ResultOutcome verify_one(ResultId id) {
  const ResultId ids[] = {id};
  return verify_paper(ids).results.at(0);
}

/// Strategy systems of the shared corpus with every protocol subset, each
/// paired with the full system it came from.
struct NosCase {
  StrategySystem system;
  std::shared_ptr<const StrategySystem> full;
};

const std::vector<NosCase>& nos_cases() {
  static const std::vector<NosCase> cases = [] {
    std::vector<NosCase> out;
    auto add = [&](const StrategySystem& ss) {
      auto full = std::make_shared<const StrategySystem>(ss);
      std::vector<std::string> names;
      for (const auto& [n, s] : ss.families()) names.push_back(n);
      for (std::uint32_t mask = 1; mask < (1U << names.size()); ++mask) {
        std::vector<std::string> pick;
        for (std::size_t i = 0; i < names.size(); ++i)
          if ((mask >> i) & 1U) pick.push_back(names[i]);
        out.push_back({ss.restrict_to(pick), full});
      }
    };
    add(io::load_strategy_system(fixture("sigma_nos.json")));
    add(io::load_strategy_system(fixture("sigma_nos_false.json")));
    StrategyCorpusParams params;
    params.count = 120;
    params.seed = 7;
    for (const auto& ss : strategy_corpus(params)) add(ss);
    return out;
  }();
  return cases;
}

/// Searches for a witness per type using oracles only: a candidate whose
/// property value disagrees with closure under the type.
std::size_t oracle_refutations(const std::vector<std::pair<System, bool>>& pool,
                               const std::function<std::optional<std::pair<System, bool>>(std::size_t)>& extra,
                               std::vector<std::string>& unrefuted) {
  std::size_t refuted = 0;
  for (const auto& t : all_types()) {
    const auto slots = slots_of(t);
    bool done = std::any_of(pool.begin(), pool.end(), [&](const auto& c) {
      return closure_oracle(c.first, slots) != c.second;
    });
    for (std::size_t i = 0; !done && extra; ++i) {
      auto c = extra(i);
      if (!c) break;
      done = closure_oracle(c->first, slots) != c->second;
    }
    if (done)
      ++refuted;
    else
      unrefuted.push_back(to_string(t));
  }
  return refuted;
}

// --- criteria -----------------------------------------------------------------

Outcome witness_examples() {
  Outcome out;
  const auto dgni = io::load_system(fixture("sigma_dgni.json"));
  const auto gni = io::load_system(fixture("sigma_gni.json"));
  const auto nos = io::load_strategy_system(fixture("sigma_nos.json"));
  out.require(dgni.size() == 15 && dgni_oracle(dgni) && !sep_oracle(dgni), "15-trace DGNI system");
  out.require(gni.size() == 4 && gni_oracle(gni) && !dgni_oracle(gni), "4-trace GNI system");
  out.require(nos_oracle(nos) && !sep_oracle(nos.union_system()), "two-trace NOS system");
  for (ResultId id : {ResultId::Ex1, ResultId::Ex2, ResultId::Ex3}) fold(out, verify_one(id));
  return out;
}

Outcome sep_gni_types() {
  Outcome out;
  const auto sep_t = parse_type("1:2/1:2");
  const auto gni_t = parse_type("1:2/0:2");
  std::size_t lib = 0, oracle = 0;
  period1().for_each([&](const System& s) {
    const bool sep = check_property(PropertyKind::Sep, s);
    const bool gni = check_property(PropertyKind::Gni, s);
    lib += sep != closed_under_type(s, sep_t);
    lib += gni != closed_under_type(s, gni_t);
    oracle += sep_oracle(s) != closure_oracle(s, {1, 2, 1, 2});
    oracle += gni_oracle(s) != closure_oracle(s, {1, 2, 0, 2});
  });
  out.note(std::to_string(period1().size()) + " systems, library discrepancies " +
           std::to_string(lib) + ", oracle discrepancies " + std::to_string(oracle));
  out.require(period1().size() == 65535, "65535 systems");
  out.require(lib == 0 && oracle == 0, "zero discrepancies");
  return out;
}

Outcome property_relations() {
  Outcome out;
  std::size_t violations = 0, disagreements = 0;
  period1().for_each([&](const System& s) {
    const bool sep = sep_oracle(s), dgni = dgni_oracle(s), gni = gni_oracle(s);
    violations += (sep && !dgni) || (dgni && !gni);
    disagreements += check_property(PropertyKind::Dgni, s) != dgni;
  });
  std::size_t systems = 0, separable = 0, nos_violations = 0, nos_disagreements = 0;
  for (const auto& c : nos_cases()) {
    ++systems;
    const bool nos = nos_oracle(c.system);
    nos_disagreements += nos != check_nos(c.system);
    if (sep_oracle(c.system.union_system())) {
      ++separable;
      nos_violations += !nos;
    }
  }
  out.note("SEP=>DGNI=>GNI violations " + std::to_string(violations) + "; " +
           std::to_string(systems) + " strategy systems, " + std::to_string(separable) +
           " separable, SEP=>NOS violations " + std::to_string(nos_violations));
  out.require(violations == 0 && disagreements == 0, "implications over the enumeration");
  out.require(systems >= 100 && nos_violations == 0 && nos_disagreements == 0,
              "SEP implies NOS on the corpus");
  fold(out, verify_one(ResultId::Prop1));
  return out;
}

Outcome type_refutations() {
  Outcome out;
  auto timed = [&](ResultId id) {
    const auto r = verify_one(id);
    fold(out, r);
    out.require(r.seconds < 10, std::string(result_id_name(id)) + " under 10 s");
  };
  for (ResultId id : {ResultId::Thm1, ResultId::Thm2, ResultId::Thm3}) timed(id);

  auto load = [](const char* n, const std::function<bool(const System&)>& p) {
    auto s = io::load_system(fixture(n));
    const bool v = p(s);
    return std::pair<System, bool>{std::move(s), v};
  };
  std::vector<std::string> missed;
  std::vector<std::pair<System, bool>> dgni_pool{
      load("sigma_dgni.json", dgni_oracle), load("sigma_not_gni.json", dgni_oracle),
      load("sigma_gni_not_dgni.json", dgni_oracle), load("sigma_not_gni_prime.json", dgni_oracle)};
  const auto dgni_refuted = oracle_refutations(dgni_pool, {}, missed);

  auto either = [](const System& s) { return sep_oracle(s) || closure_oracle(s, {1, 2, 2, 2}); };
  std::vector<std::pair<System, bool>> disj_pool{
      load("sigma_sep.json", either), load("sigma_gni_not_dgni.json", either),
      load("sigma_not_gni.json", either), load("sigma_not_gni_prime.json", either),
      load("sigma_mix.json", either)};
  auto from_enumeration = [&](std::size_t i) -> std::optional<std::pair<System, bool>> {
    if (i >= period1().size()) return std::nullopt;
    auto s = period1()[i];
    const bool v = either(s);
    return std::pair<System, bool>{std::move(s), v};
  };
  const auto disj_refuted = oracle_refutations(disj_pool, from_enumeration, missed);

  std::vector<std::pair<System, bool>> nos_pool;
  for (const char* n : {"sigma_nos.json", "sigma_nos_false.json"}) {
    auto ss = io::load_strategy_system(fixture(n));
    nos_pool.push_back({ss.union_system(), nos_oracle(ss)});
  }
  auto from_corpus = [&](std::size_t i) -> std::optional<std::pair<System, bool>> {
    if (i >= nos_cases().size()) return std::nullopt;
    const auto& c = nos_cases()[i];
    return std::pair<System, bool>{c.system.union_system(), nos_oracle(c.system)};
  };
  const auto nos_refuted = oracle_refutations(nos_pool, from_corpus, missed);

  out.note("oracle refutations: DGNI " + std::to_string(dgni_refuted) + "/81, NOS " +
           std::to_string(nos_refuted) + "/81, SEP or 1:2/2:2 " + std::to_string(disj_refuted) +
           "/81");
  for (const auto& m : missed) out.note("oracle found no witness for " + m);
  out.require(dgni_refuted == 81 && nos_refuted == 81 && disj_refuted == 81,
              "every type refuted by the oracles");
  return out;
}

Outcome type_lemmas() {
  Outcome out;
  fold(out, verify_one(ResultId::LemSwap));
  fold(out, verify_one(ResultId::LemAllSys));
  // oracle sample: swapped types agree, and the 31 trivial types close everything
  std::mt19937_64 rng(5);
  const auto trivial = trivially_closing_types();
  std::size_t checked = 0, swap_bad = 0, trivial_bad = 0, lib_bad = 0;
  for (int i = 0; i < 400; ++i) {
    const auto& s = period1()[rng() % period1().size()];
    for (const auto& t : all_types()) {
      const bool c = closure_oracle(s, slots_of(t));
      ++checked;
      swap_bad += c != closure_oracle(s, slots_of(swap_type(t)));
      lib_bad += c != closed_under_type(s, t);
    }
    for (const auto& t : trivial) trivial_bad += !closure_oracle(s, slots_of(t));
  }
  out.note(std::to_string(checked) + " sampled (system, type) pairs against the oracle: swap " +
           std::to_string(swap_bad) + ", library " + std::to_string(lib_bad) + ", trivial types " +
           std::to_string(trivial_bad) + " violations");
  out.require(trivial.size() == 31, "31 trivially closing types");
  out.require(swap_bad == 0 && lib_bad == 0 && trivial_bad == 0, "oracle sample");
  return out;
}

Outcome nos_by_sifs() {
  Outcome out;
  std::map<const StrategySystem*, SifFamily> families;
  std::size_t systems = 0, nos_false = 0, mismatches = 0, too_big = 0;
  for (const auto& c : nos_cases()) {
    auto it = families.find(c.full.get());
    if (it == families.end()) it = families.emplace(c.full.get(), nos_family(c.full)).first;
    ++systems;
    const bool nos = nos_oracle(c.system);
    nos_false += !nos;
    mismatches += nos != closed_under_family(c.system.union_system(), it->second);
    too_big += c.full->families().size() > 3;
    for (const auto& [n, s] : c.full->families()) too_big += s.size() > 8;
  }
  out.note(std::to_string(systems) + " strategy systems, " + std::to_string(nos_false) +
           " without NOS, " + std::to_string(mismatches) + " mismatches");
  out.require(systems >= 100 && nos_false > 0 && too_big == 0, "corpus shape");
  out.require(mismatches == 0, "NOS iff closure under the NOS family");
  fold(out, verify_one(ResultId::Thm4));
  return out;
}

Outcome zigzag_representation() {
  Outcome out;
  const auto r = verify_one(ResultId::Thm5);
  out.require(r.pass, "THM5 verification");
  for (const auto& e : r.evidence) out.note(e);
  return out;
}

Outcome generalized_conjunction() {
  Outcome out;
  const auto fam = conj_family(gni_type(), rgni_type());
  std::size_t mismatches = 0;
  period1().for_each([&](const System& s) { mismatches += closed_under_gen(s, fam) != dgni_oracle(s); });
  out.note(std::to_string(period1().size()) + " systems, conjunction vs DGNI oracle mismatches " +
           std::to_string(mismatches));
  out.require(mismatches == 0, "DGNI iff closure under the conjoined types");
  fold(out, verify_one(ResultId::CorDgni));
  const auto g = verify_one(ResultId::PropGenConj);
  fold(out, g);
  for (const auto& e : g.evidence) out.note(e);
  return out;
}

Outcome zero_leakage() {
  Outcome out;
  for (ResultId id : {ResultId::PropZlDisj, ResultId::PropNosZl, ResultId::ThmZlConj})
    fold(out, verify_one(id));
  // the disjunction target has no Q; every singleton does
  const auto s0 = p1("0000"), s1 = p1("1111");
  std::vector<System> universe{binary_system({s0}), binary_system({s1}), binary_system({s0, s1})};
  out.require(!zl_q_search(std::vector<System>{universe[0], universe[1]}, universe),
              "no Q for the disjunction");
  for (int i = 0; i < 2; ++i) {
    auto q = zl_q_search(std::vector<System>{universe[i]}, universe);
    bool exact = q.has_value();
    for (int j = 0; exact && j < 3; ++j) exact = zl_check(universe[j], *q) == (i == j);
    out.require(exact, "Q for a singleton realizes it exactly");
  }
  std::size_t mismatches = 0;
  for (const auto& c : nos_cases())
    mismatches += zl_check(c.system.union_system(), nos_predicate(c.system)) != nos_oracle(c.system);
  out.note(std::to_string(nos_cases().size()) + " strategy systems, NOS predicate vs oracle mismatches " +
           std::to_string(mismatches));
  out.require(mismatches == 0, "NOS as a ZL property");
  return out;
}

Outcome psp() {
  Outcome out;
  const auto r = verify_one(ResultId::PropPspSif);
  fold(out, r);
  for (const auto& e : r.evidence) out.note(e);
  std::mt19937_64 rng(2024);
  std::size_t cases = 0, mismatches = 0, holds = 0;
  for (; cases < 500; ++cases) {
    auto s = random_async(rng, 4, 4, 8);
    const bool expect = psp_oracle(s);
    holds += expect;
    mismatches += psp_check(s) != expect;
    mismatches += closed_under_psp_sif(s) != expect;
  }
  out.note(std::to_string(cases) + " larger random systems against the decomposition oracle: " +
           std::to_string(holds) + " satisfy PSP, " + std::to_string(mismatches) + " mismatches");
  out.require(mismatches == 0, "oracle agreement");
  return out;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double limit_seconds;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"witness examples for DGNI, GNI and NOS", witness_examples, 1},
      {"SEP and GNI represented by their types over all period-1 systems", sep_gni_types, 60},
      {"SEP => DGNI => GNI and SEP => NOS", property_relations, 0},
      {"every type refuted for DGNI, NOS and SEP or 1:2/2:2", type_refutations, 0},
      {"swap invariance and trivially closing types", type_lemmas, 0},
      {"NOS iff closure under the NOS family", nos_by_sifs, 0},
      {"zigzag SIFs represent every subset of a generated collection", zigzag_representation, 0},
      {"generalized SIF conjunction and DGNI", generalized_conjunction, 0},
      {"zero-leakage disjunction, NOS and conjunction", zero_leakage, 0},
      {"PSP iff closure under the PSP SIF", psp, 120},
  };
  bool all = true;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note(std::string("error: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      out.pass = false;
      out.note("exceeded " + std::to_string(c.limit_seconds) + " s");
    }
    all = all && out.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << c.name << " ("
              << timing << ")\n";
    for (const auto& note : out.notes) std::cout << "    " << note << "\n";
  }
  return all ? 0 : 1;
}
