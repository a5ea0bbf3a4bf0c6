#include <doctest.h>

#include <set>

#include "siflab/enumerate.hpp"
#include "siflab/io.hpp"
#include "siflab/sif_types.hpp"
#include "support.hpp"

using namespace siflab;
using namespace siflab::test;

namespace {

std::array<int, 4> slots_of(const SifType& t) {
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = static_cast<int>(t.slots[k]);
  return out;
}

System load(const char* name) { return io::load_system(fixture(name)); }

}  // namespace

TEST_CASE("there are 81 distinct types") {
  auto all = enumerate_types();
  CHECK(all.size() == 81);
  std::set<SifType> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 81);
  for (int i = 0; i < 81; ++i) {
    CHECK(all[i].index() == i);
    CHECK(SifType::from_index(i) == all[i]);
    CHECK(parse_type(to_string(all[i])) == all[i]);
  }
}

TEST_CASE("type literals") {
  auto t = parse_type("1:2/0:2");
  CHECK(t.slot(Component::HighIn) == Slot::First);
  CHECK(t.slot(Component::LowIn) == Slot::Second);
  CHECK(t.slot(Component::HighOut) == Slot::Free);
  CHECK(t.slot(Component::LowOut) == Slot::Second);
  CHECK(to_string(t) == "1:2/0:2");
  for (const char* bad : {"", "1:2/0", "1:3/0:2", "1-2/0:2", "1:2/0:2x", "12/02"})
    CHECK_THROWS_AS(parse_type(bad), ParseError);
}

TEST_CASE("swap exchanges First and Second") {
  CHECK(swap_type(parse_type("1:0/2:1")) == parse_type("2:0/1:2"));
  for (const auto& t : enumerate_types()) CHECK(swap_type(swap_type(t)) == t);
  int fixed = 0;
  for (const auto& t : enumerate_types()) fixed += swap_type(t) == t;
  CHECK(fixed == 1);
}

TEST_CASE("closure examples") {
  CHECK(closed_under_type(load("sigma_sep.json"), parse_type("1:2/1:2")));
  CHECK_FALSE(closed_under_type(load("sigma_dgni.json"), parse_type("1:2/1:2")));
  CHECK(closed_under_type(load("sigma_dgni.json"), parse_type("0:0/0:0")));
  CHECK(closed_under_type(load("sigma_mix.json"), parse_type("1:2/0:2")));
  CHECK(closed_under_type(binary_system({}), parse_type("1:2/1:2")));
}

TEST_CASE("closure agrees with the definition oracle on lassos") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 120; ++i) {
    std::vector<LassoTrace> ts;
    for (int k = 0; k < 4; ++k) {
      auto raw = random_raw_lasso(rng, 1, 2);
      auto t = canonicalize(raw.prefix, raw.cycle);
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
    auto s = binary_system(ts);
    for (const auto& t : enumerate_types())
      REQUIRE(closed_under_type(s, t) == closure_oracle(s, slots_of(t)));
  }
}

TEST_CASE("SEP and GNI types on a random sample of period-1 systems") {
  // the exhaustive run lives in the acceptance suite
  std::mt19937_64 rng(1);
  const auto sep = parse_type("1:2/1:2");
  const auto gni = parse_type("1:2/0:2");
  for (int i = 0; i < 2000; ++i) {
    auto s = random_p1_system(rng, 30 + static_cast<int>(rng() % 60));
    CHECK(check_property(PropertyKind::Sep, s) == closed_under_type(s, sep));
    CHECK(check_property(PropertyKind::Gni, s) == closed_under_type(s, gni));
  }
}

TEST_CASE("SEP's type does not represent GNI") {
  std::vector<System> universe{load("sigma_gni.json")};
  CHECK_FALSE(represents(parse_type("1:2/1:2"), PropertyKind::Gni, universe));
  CHECK(represents(parse_type("1:2/0:2"), PropertyKind::Gni, universe));
}

TEST_CASE("represents is antitone in the universe") {
  std::mt19937_64 rng(2);
  std::vector<System> universe;
  for (int i = 0; i < 40; ++i) universe.push_back(random_p1_system(rng));
  for (const auto& t : enumerate_types()) {
    if (!represents(t, PropertyKind::Gni, universe)) continue;
    std::vector<System> half(universe.begin(), universe.begin() + 20);
    CHECK(represents(t, PropertyKind::Gni, half));
  }
}

TEST_CASE("types closing every system") {
  const char* listed[] = {"0:0/0:0", "0:0/0:1", "0:0/1:0", "0:1/0:0", "1:0/0:0", "0:0/1:1",
                          "0:1/0:1", "1:0/0:1", "1:0/1:0", "0:1/1:0", "1:1/0:0", "1:1/1:0",
                          "1:1/0:1", "1:0/1:1", "0:1/1:1", "1:1/1:1"};
  std::set<SifType> expected;
  for (const char* l : listed) {
    expected.insert(parse_type(l));
    expected.insert(swap_type(parse_type(l)));
  }
  auto got = trivially_closing_types();
  CHECK(std::set<SifType>(got.begin(), got.end()) == expected);
  CHECK(expected.size() == 31);
}

TEST_CASE("the DGNI witness pool refutes every type") {
  std::vector<System> pool{load("sigma_dgni.json"), load("sigma_not_gni.json"),
                           load("sigma_gni_not_dgni.json"), load("sigma_not_gni_prime.json")};
  const std::vector<std::string> labels{"0", "1", "2", "3"};
  auto report = refute_all_types(
      [](const System& s) { return check_property(PropertyKind::Dgni, s); }, pool, labels);
  CHECK(report.verdicts.size() == 81);
  CHECK(report.all_refuted());
  for (const auto& v : report.verdicts) {
    REQUIRE(v.witness.has_value());
    // the reported witness really separates property and closure
    const System* w = nullptr;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (*v.witness == labels[i]) w = &pool[i];
    REQUIRE(w != nullptr);
    const bool holds = check_property(PropertyKind::Dgni, *w);
    const bool closed = closure_oracle(*w, slots_of(v.type));
    CHECK(holds != closed);
    CHECK((v.direction == RefutationDirection::HoldsButNotClosed) == holds);
  }
}

TEST_CASE("SEP leaves exactly its type and the swap unrefuted") {
  auto universe = period1_binary_systems();
  std::vector<System> pool;
  universe.for_each([&](System s) { pool.push_back(std::move(s)); });
  auto report = refute_all_types(
      [](const System& s) { return check_property(PropertyKind::Sep, s); }, pool);
  auto left = report.unrefuted();
  std::set<SifType> got(left.begin(), left.end());
  CHECK(got == std::set<SifType>{parse_type("1:2/1:2"), parse_type("2:1/2:1")});
}

TEST_CASE("extension candidates are consulted after the pool") {
  std::vector<RefutationCandidate> pool{{"only", load("sigma_sep.json"), true}};
  auto extension = [&](std::size_t i) -> std::optional<RefutationCandidate> {
    if (i > 0) return std::nullopt;
    return RefutationCandidate{"extra", load("sigma_dgni.json"), false};
  };
  auto report = refute_all_types(pool, extension);
  // closed_under(0:0/0:0) on a non-satisfying system refutes the trivial type
  const auto& v = report.verdicts[parse_type("0:0/0:0").index()];
  CHECK(v.refuted());
  CHECK(v.from_extension);
  CHECK(*v.witness == "extra");
  CHECK(v.direction == RefutationDirection::ClosedButFails);
  CHECK(report.extension_used == std::vector<std::string>{"extra"});
}
