#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "siflab/properties.hpp"
#include "siflab/trace.hpp"

namespace siflab {

/// A protocol for one user (low or high). At each step the user
/// nondeterministically picks an input from `emit[state]`; after seeing the
/// step's own input and output it moves to `update[(state, input, output)]`.
struct UserProtocol {
  std::vector<std::string> states;
  std::string initial;
  std::map<std::string, std::vector<Symbol>> emit;
  std::map<std::tuple<std::string, Symbol, Symbol>, std::string> update;
};

/// The system protocol: given both current inputs it picks a (high output,
/// low output) pair from `output`, then moves to `update`.
struct SystemProtocol {
  std::vector<std::string> states;
  std::string initial;
  std::map<std::tuple<std::string, Symbol, Symbol>, std::vector<std::pair<Symbol, Symbol>>> output;
  std::map<std::tuple<std::string, Symbol, Symbol, Symbol, Symbol>, std::string> update;
};

struct GenerationMode {
  enum class Kind { ExactLasso, Bounded };
  Kind kind = Kind::ExactLasso;
  std::size_t bound = 0;

  static GenerationMode exact() { return {}; }
  /// Finite traces of exactly `n` steps; n >= 1.
  static GenerationMode bounded(std::size_t n);
};

/// Sigma_H: every trace produced by running the three protocols together.
/// Per step the users emit their inputs simultaneously, then the system emits
/// both outputs, then all three update.
///
/// In exact mode the result is the set of canonical lassos of all infinite
/// runs; RunExplosionError is thrown when a reachable cycle carries a
/// nondeterministic choice. In bounded mode the result is every run cut to
/// `bound` steps. AlphabetError when a protocol emits a symbol outside the
/// space; PreconditionError when a table lookup is undefined.
System generate_sigma_h(const SystemProtocol& system, const UserProtocol& low,
                        const UserProtocol& high, GenerationMode mode, SpacePtr space);

struct StrategyBuild {
  StrategySystem strategies;
  bool injective = false;
};

/// Generates Sigma_H for every named high protocol and checks injectivity.
StrategyBuild build_strategy_system(const SystemProtocol& system, const UserProtocol& low,
                                    const std::map<std::string, UserProtocol>& highs,
                                    GenerationMode mode, SpacePtr space);

}  // namespace siflab
