#include "siflab/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace siflab {

namespace {

std::vector<Tuple4> all_letters(const Alphabets& a) {
  std::vector<Tuple4> out;
  for (const auto& hi : a.of(Component::HighIn))
    for (const auto& li : a.of(Component::LowIn))
      for (const auto& ho : a.of(Component::HighOut))
        for (const auto& lo : a.of(Component::LowOut)) out.push_back({hi, li, ho, lo});
  return out;
}

// all words of exactly `len` letters
void words(const std::vector<Tuple4>& letters, std::size_t len,
           const std::function<void(const std::vector<Tuple4>&)>& f) {
  std::vector<std::size_t> digits(len, 0);
  std::vector<Tuple4> w(len);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) w[i] = letters[digits[i]];
    f(w);
    std::size_t i = 0;
    while (i < len && ++digits[i] == letters.size()) digits[i++] = 0;
    if (i == len) return;
  }
}

}  // namespace

std::vector<LassoTrace> generate_universe(const Alphabets& alphabets, std::size_t max_prefix,
                                          std::size_t max_cycle) {
  const auto letters = all_letters(alphabets);
  std::vector<LassoTrace> out;
  for (std::size_t p = 0; p <= max_prefix; ++p) {
    words(letters, p, [&](const std::vector<Tuple4>& prefix) {
      for (std::size_t c = 1; c <= max_cycle; ++c)
        words(letters, c, [&](const std::vector<Tuple4>& cycle) {
          out.push_back(canonicalize(prefix, cycle));
        });
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SystemEnumeration::SystemEnumeration(SpacePtr space, std::vector<LassoTrace> universe,
                                     std::uint64_t cap)
    : space_(std::move(space)), universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  for (const auto& t : universe_) space_->require(t);
  if (universe_.size() >= 63 || ((std::uint64_t{1} << universe_.size()) - 1) > cap)
    throw CapExceededError("universe of " + std::to_string(universe_.size()) +
                           " traces yields more than " + std::to_string(cap) + " systems");
  count_ = (std::uint64_t{1} << universe_.size()) - 1;
}

System SystemEnumeration::from_mask(std::uint64_t mask) const {
  std::vector<LassoTrace> members;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if ((mask >> i) & 1U) members.push_back(universe_[i]);
  return System::make(space_, std::move(members));
}

SystemEnumeration enumerate_systems(const EnumerationParams& params) {
  Alphabets a;
  for (std::size_t c = 0; c < 4; ++c) {
    if (params.alphabet_sizes[c] == 0) throw PreconditionError("alphabets must be nonempty");
    for (std::size_t k = 0; k < params.alphabet_sizes[c]; ++k)
      a.symbols[c].push_back(std::to_string(k));
  }
  if (params.max_cycle == 0) throw PreconditionError("max_cycle must be at least 1");

  // rough size guard before materializing the universe
  std::uint64_t letters = 1;
  for (auto n : params.alphabet_sizes) letters *= n;
  double words = 0;
  for (std::size_t p = 0; p <= params.max_prefix; ++p)
    for (std::size_t c = 1; c <= params.max_cycle; ++c)
      words += std::pow(static_cast<double>(letters), static_cast<double>(p + c));
  if (words > 4096)
    throw CapExceededError("trace universe too large to enumerate (" +
                           std::to_string(static_cast<std::uint64_t>(words)) + " lassos)");

  auto universe = generate_universe(a, params.max_prefix, params.max_cycle);
  if (params.trace_filter)
    std::erase_if(universe, [&](const LassoTrace& t) { return !params.trace_filter(t); });
  auto space = std::make_shared<const TraceSpace>(
      a, universe, GeneratorParams{params.max_prefix, params.max_cycle});
  return SystemEnumeration(space, std::move(universe), params.cap);
}

SystemEnumeration period1_binary_systems() {
  return SystemEnumeration(binary_space(), period1_binary_traces());
}

std::vector<LassoTrace> period1_binary_traces() {
  return generate_universe(Alphabets::binary(), 0, 1);
}

}  // namespace siflab
