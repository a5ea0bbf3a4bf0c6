#include <doctest.h>

#include <cstdio>
#include <set>

#include "siflab/enumerate.hpp"
#include "siflab/io.hpp"
#include "support.hpp"

using namespace siflab;
using namespace siflab::test;

TEST_CASE("period-1 binary enumeration") {
  auto all = period1_binary_systems();
  CHECK(all.size() == 65535);
  CHECK(all.universe().size() == 16);
  CHECK(all[0].size() == 1);
  CHECK(all[65534].size() == 16);
  CHECK(period1_binary_traces().size() == 16);
}

TEST_CASE("a one-trace universe has one system") {
  EnumerationParams params;
  params.alphabet_sizes = {1, 1, 1, 1};
  auto e = enumerate_systems(params);
  CHECK(e.size() == 1);
  CHECK(e[0].size() == 1);
}

TEST_CASE("enumeration respects the cap") {
  EnumerationParams params;
  params.cap = 10;
  CHECK_THROWS_AS(enumerate_systems(params), CapExceededError);
}

TEST_CASE("generated universes are canonical and complete") {
  Alphabets a;
  a.symbols = {std::vector<Symbol>{"0", "1"}, {"0"}, {"0"}, {"0"}};
  auto u = generate_universe(a, 1, 2);
  // a^ω, b^ω, (ab)^ω, (ba)^ω, and one differing prefix letter before each
  // of those cycles
  CHECK(u.size() == 8);
  std::set<LassoTrace> distinct(u.begin(), u.end());
  CHECK(distinct.size() == u.size());
  for (const auto& t : u) CHECK(canonicalize(t.prefix(), t.cycle()) == t);
}

TEST_CASE("trace filters shrink the universe") {
  EnumerationParams params;
  params.trace_filter = [](const LassoTrace& t) { return t.cycle()[0][0] == "0"; };
  auto e = enumerate_systems(params);
  CHECK(e.size() == 255);
}

TEST_CASE("system JSON round trip") {
  auto s = binary_system({canonicalize({tup("0111")}, {tup("1111")}), p1("0000"),
                          canonicalize({tup("0101")}, {})});
  auto back = io::system_from_json(io::to_json(s));
  CHECK(back == s);
  const auto path = std::filesystem::temp_directory_path() / "siflab_roundtrip.json";
  io::write_json(path, io::to_json(s));
  CHECK(io::load_system(path) == s);
  std::remove(path.string().c_str());
}

TEST_CASE("strategy and async JSON round trips") {
  auto ss = io::load_strategy_system(fixture("sigma_nos_false.json"));
  auto back = io::strategy_system_from_json(io::to_json(ss));
  CHECK(back.families().size() == 2);
  CHECK(back.union_system() == ss.union_system());
  auto a = io::load_async_system(fixture("psp_holds.json"));
  CHECK(io::async_system_from_json(io::to_json(a)) == a);
}

TEST_CASE("malformed system files") {
  using io::json;
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"traces": [{"cycle": [["0","0"]]}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"nothing": 1})")), ParseError);
  CHECK_THROWS_AS(
      io::system_from_json(json::parse(
          R"({"traces": [{"cycle": [["0","0","0","0"]]}, {"prefix": [["0","0","0","0"]], "cycle": [["0","0","0","0"]]}]})")),
      DuplicateTraceError);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"traces": [{"cycle": [["0","0","7","0"]]}]})")),
                  AlphabetError);
  CHECK_THROWS_AS(io::read_json(fixture("missing.json")), ParseError);
}
