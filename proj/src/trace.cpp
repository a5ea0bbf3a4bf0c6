#include "siflab/trace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace siflab {

const char* component_name(Component c) {
  switch (c) {
    case Component::HighIn: return "hi";
    case Component::LowIn: return "li";
    case Component::HighOut: return "ho";
    case Component::LowOut: return "lo";
  }
  return "?";
}

ComponentMask::ComponentMask(std::initializer_list<Component> components) {
  for (Component c : components) bits_ |= static_cast<std::uint8_t>(1U << static_cast<int>(c));
  if (bits_ == 0) throw PreconditionError("component mask must be nonempty");
}

ComponentMask ComponentMask::from_bits(std::uint8_t bits) {
  if ((bits & 0xF) == 0 || (bits & ~0xF) != 0)
    throw PreconditionError("component mask bits must be a nonempty subset of 0xF");
  ComponentMask m;
  m.bits_ = bits;
  return m;
}

Alphabets Alphabets::binary() {
  Alphabets a;
  for (auto& s : a.symbols) s = {"0", "1"};
  return a;
}

bool Alphabets::contains(Component c, const Symbol& s) const {
  const auto& syms = of(c);
  return std::find(syms.begin(), syms.end(), s) != syms.end();
}

namespace {

void check_alphabet(const Alphabets& a, const Tuple4& t) {
  for (Component c : kAllComponents) {
    const Symbol& s = t[static_cast<int>(c)];
    if (!a.contains(c, s))
      throw AlphabetError("symbol '" + s + "' is not in the " + component_name(c) +
                          " alphabet");
  }
}

}  // namespace

TraceSpace::TraceSpace(Alphabets alphabets, std::optional<std::vector<LassoTrace>> universe,
                       std::optional<GeneratorParams> generator)
    : alphabets_(std::move(alphabets)),
      universe_(std::move(universe)),
      generator_(generator) {
  if (universe_) {
    for (const auto& t : *universe_) {
      for (const auto& x : t.prefix()) check_alphabet(alphabets_, x);
      for (const auto& x : t.cycle()) check_alphabet(alphabets_, x);
    }
    std::sort(universe_->begin(), universe_->end());
    universe_->erase(std::unique(universe_->begin(), universe_->end()), universe_->end());
  }
}

bool TraceSpace::contains(const LassoTrace& t) const {
  try {
    require(t);
  } catch (const Error&) {
    return false;
  }
  return true;
}

void TraceSpace::require(const LassoTrace& t) const {
  for (const auto& x : t.prefix()) check_alphabet(alphabets_, x);
  for (const auto& x : t.cycle()) check_alphabet(alphabets_, x);
  if (universe_ && !std::binary_search(universe_->begin(), universe_->end(), t))
    throw SpaceMismatchError("trace " + to_string(t) + " is not in the declared universe");
}

bool TraceSpace::compatible_with(const TraceSpace& other) const {
  return alphabets_ == other.alphabets_ && universe_ == other.universe_;
}

SpacePtr binary_space() {
  static const SpacePtr space = std::make_shared<const TraceSpace>(Alphabets::binary());
  return space;
}

System System::make(SpacePtr space, std::vector<LassoTrace> traces) {
  if (!space) throw PreconditionError("system requires a trace space");
  for (const auto& t : traces) space->require(t);
  std::sort(traces.begin(), traces.end());
  auto dup = std::adjacent_find(traces.begin(), traces.end());
  if (dup != traces.end()) throw DuplicateTraceError("duplicate trace " + to_string(*dup));
  System s;
  s.space_ = std::move(space);
  s.traces_ = std::move(traces);
  return s;
}

bool System::contains(const LassoTrace& t) const {
  return std::binary_search(traces_.begin(), traces_.end(), t);
}

std::optional<std::size_t> System::index_of(const LassoTrace& t) const {
  auto it = std::lower_bound(traces_.begin(), traces_.end(), t);
  if (it == traces_.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - traces_.begin());
}

LassoTrace canonicalize(std::vector<Tuple4> prefix, std::vector<Tuple4> cycle) {
  return LassoTrace::make(std::move(prefix), std::move(cycle));
}

LassoTrace canonicalize(const Alphabets& alphabets, std::vector<Tuple4> prefix,
                        std::vector<Tuple4> cycle) {
  for (const auto& x : prefix) check_alphabet(alphabets, x);
  for (const auto& x : cycle) check_alphabet(alphabets, x);
  return canonicalize(std::move(prefix), std::move(cycle));
}

bool trace_eq(const LassoTrace& a, const LassoTrace& b) { return a == b; }

View project(const LassoTrace& t, ComponentMask mask) {
  auto restrict = [&](const std::vector<Tuple4>& word) {
    std::vector<std::vector<Symbol>> out;
    out.reserve(word.size());
    for (const auto& x : word) {
      std::vector<Symbol> letter;
      for (Component c : kAllComponents)
        if (mask.contains(c)) letter.push_back(x[static_cast<int>(c)]);
      out.push_back(std::move(letter));
    }
    return out;
  };
  return View::make(restrict(t.prefix()), restrict(t.cycle()));
}

std::vector<Tuple4> prefix_of(const LassoTrace& t, std::size_t n) {
  if (t.is_finite()) n = std::min(n, t.finite_length());
  std::vector<Tuple4> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(t.at(i));
  return out;
}

std::string to_string(const Tuple4& t) {
  return "(" + t[0] + "," + t[1] + "," + t[2] + "," + t[3] + ")";
}

std::string to_string(const LassoTrace& t) {
  std::string out;
  for (const auto& x : t.prefix()) out += to_string(x);
  if (t.is_finite()) return out.empty() ? std::string("<>") : out;
  if (t.cycle().size() == 1) return out + to_string(t.cycle()[0]) + "^ω";
  out += "(";
  for (const auto& x : t.cycle()) out += to_string(x);
  return out + ")^ω";
}

std::string to_string(const System& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << to_string(s[i]);
  os << "}";
  return os.str();
}

std::vector<std::uint32_t> intern_views(const System& s, ComponentMask mask) {
  std::map<View, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  for (const auto& t : s) {
    auto [it, inserted] = ids.emplace(project(t, mask), static_cast<std::uint32_t>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

ComponentIndex::ComponentIndex(const System& s) : ids_(s.size()) {
  for (Component c : kAllComponents) {
    // single-component views compared as symbol lassos
    std::map<Lasso<Symbol>, std::uint32_t> ids;
    const int k = static_cast<int>(c);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& t = s[i];
      std::vector<Symbol> pre, cyc;
      pre.reserve(t.prefix().size());
      cyc.reserve(t.cycle().size());
      for (const auto& x : t.prefix()) pre.push_back(x[k]);
      for (const auto& x : t.cycle()) cyc.push_back(x[k]);
      auto view = Lasso<Symbol>::make(std::move(pre), std::move(cyc));
      auto [it, inserted] = ids.emplace(std::move(view), static_cast<std::uint32_t>(ids.size()));
      ids_[i][k] = it->second;
    }
  }
}

}  // namespace siflab
