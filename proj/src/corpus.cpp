#include "siflab/corpus.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace siflab {

namespace {

const std::vector<Symbol> kBits{"0", "1"};

Symbol bit(std::mt19937_64& rng) { return kBits[rng() % 2]; }
bool chance(std::mt19937_64& rng, int percent) { return static_cast<int>(rng() % 100) < percent; }

std::vector<std::string> state_names(std::size_t n, const char* stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

UserProtocol random_user(std::mt19937_64& rng, const char* stem) {
  UserProtocol p;
  p.states = state_names(1 + rng() % 2, stem);
  p.initial = p.states.front();
  for (const auto& s : p.states)
    p.emit[s] = chance(rng, 70) ? std::vector<Symbol>{bit(rng)} : kBits;
  for (const auto& s : p.states)
    for (const auto& in : kBits)
      for (const auto& out : kBits) p.update[{s, in, out}] = p.states[rng() % p.states.size()];
  return p;
}

SystemProtocol random_system(std::mt19937_64& rng) {
  SystemProtocol p;
  p.states = state_names(1 + rng() % 2, "s");
  p.initial = p.states.front();
  // outputs are simple functions of the inputs so that information flow
  // patterns (echo, leak, constant) occur often
  auto pick = [&](const Symbol& hi, const Symbol& li) -> Symbol {
    switch (rng() % 4) {
      case 0: return hi;
      case 1: return li;
      case 2: return hi == li ? "0" : "1";
      default: return bit(rng);
    }
  };
  for (const auto& s : p.states)
    for (const auto& hi : kBits)
      for (const auto& li : kBits) {
        std::vector<std::pair<Symbol, Symbol>> outs{{pick(hi, li), pick(hi, li)}};
        if (chance(rng, 15)) outs.emplace_back(pick(hi, li), pick(hi, li));
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        p.output[{s, hi, li}] = std::move(outs);
      }
  for (const auto& s : p.states)
    for (const auto& hi : kBits)
      for (const auto& li : kBits)
        for (const auto& ho : kBits)
          for (const auto& lo : kBits)
            p.update[{s, hi, li, ho, lo}] = p.states[rng() % p.states.size()];
  return p;
}

}  // namespace

RandomProtocols random_protocols(std::mt19937_64& rng, std::size_t protocols) {
  RandomProtocols r;
  r.system = random_system(rng);
  r.low = random_user(rng, "l");
  for (std::size_t i = 0; i < protocols; ++i)
    r.highs.emplace("H" + std::to_string(i), random_user(rng, "h"));
  return r;
}

std::vector<StrategySystem> strategy_corpus(const StrategyCorpusParams& params) {
  std::mt19937_64 rng(params.seed);
  std::vector<StrategySystem> out;
  std::set<std::vector<std::vector<LassoTrace>>> seen;
  for (std::size_t attempt = 0; attempt < params.max_attempts && out.size() < params.count;
       ++attempt) {
    const std::size_t n = 1 + rng() % params.max_protocols;
    auto protocols = random_protocols(rng, n);
    std::optional<StrategyBuild> build;
    try {
      build = build_strategy_system(protocols.system, protocols.low, protocols.highs,
                                    GenerationMode::exact(), binary_space());
    } catch (const RunExplosionError&) {
      build = build_strategy_system(protocols.system, protocols.low, protocols.highs,
                                    GenerationMode::bounded(2), binary_space());
    }
    if (!build->injective) continue;
    bool small = true;
    std::vector<std::vector<LassoTrace>> key;
    for (const auto& [name, sys] : build->strategies.families()) {
      small = small && sys.size() <= params.max_traces;
      key.push_back(sys.traces());
    }
    if (!small || !seen.insert(key).second) continue;
    out.push_back(std::move(build->strategies));
  }
  if (out.size() < params.count)
    throw CapExceededError("strategy corpus: only " + std::to_string(out.size()) +
                           " systems found within the attempt budget");
  return out;
}

}  // namespace siflab
