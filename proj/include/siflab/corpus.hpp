#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "siflab/strategy.hpp"

namespace siflab {

struct StrategyCorpusParams {
  std::size_t count = 120;
  std::uint64_t seed = 7;
  std::size_t max_protocols = 3;
  std::size_t max_traces = 8;
  /// Upper bound on generation attempts before giving up.
  std::size_t max_attempts = 200000;
};

/// A randomly generated protocol triple set over binary alphabets.
struct RandomProtocols {
  SystemProtocol system;
  UserProtocol low;
  std::map<std::string, UserProtocol> highs;
};

RandomProtocols random_protocols(std::mt19937_64& rng, std::size_t protocols);

/// Injective strategy systems generated from random protocols (exact lasso
/// mode, falling back to two-step bounded runs when a cycle is
/// nondeterministic), each with at most `max_protocols` protocols of at most
/// `max_traces` traces. Deterministic for a given seed.
std::vector<StrategySystem> strategy_corpus(const StrategyCorpusParams& params = {});

}  // namespace siflab
