#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "siflab/errors.hpp"

namespace siflab {

using Symbol = std::string;

/// The four components of a synchronous step, in tuple order.
enum class Component : std::uint8_t { HighIn = 0, LowIn = 1, HighOut = 2, LowOut = 3 };

inline constexpr std::array<Component, 4> kAllComponents = {
    Component::HighIn, Component::LowIn, Component::HighOut, Component::LowOut};

const char* component_name(Component c);

/// (high input, low input, high output, low output)
using Tuple4 = std::array<Symbol, 4>;

/// An eventually periodic word `prefix . cycle^omega`, or a finite word when
/// the cycle is empty.
///
/// Values are always canonical: the cycle is primitive and the prefix cannot
/// be shortened by rotating the cycle. Structural equality is therefore word
/// equality.
template <class Letter>
class Lasso {
 public:
  Lasso() = default;

  static Lasso make(std::vector<Letter> prefix, std::vector<Letter> cycle) {
    Lasso l;
    l.prefix_ = std::move(prefix);
    l.cycle_ = std::move(cycle);
    l.normalize();
    return l;
  }

  const std::vector<Letter>& prefix() const { return prefix_; }
  const std::vector<Letter>& cycle() const { return cycle_; }
  bool is_finite() const { return cycle_.empty(); }

  /// Length of a finite word; unspecified for infinite ones.
  std::size_t finite_length() const { return prefix_.size(); }

  /// Letter at 0-based position `i`. For finite words `i` must be in range.
  const Letter& at(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
  }

  auto operator<=>(const Lasso&) const = default;
  bool operator==(const Lasso&) const = default;

 private:
  void normalize() {
    if (cycle_.empty()) return;
    // primitive root of the cycle
    const std::size_t n = cycle_.size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) periodic = cycle_[i] == cycle_[i - p];
      if (periodic) {
        cycle_.resize(p);
        break;
      }
    }
    // absorb the prefix tail into the cycle by rotation
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
      Letter last = std::move(cycle_.back());
      cycle_.pop_back();
      cycle_.insert(cycle_.begin(), std::move(last));
      prefix_.pop_back();
    }
  }

  std::vector<Letter> prefix_;
  std::vector<Letter> cycle_;
};

using LassoTrace = Lasso<Tuple4>;

/// A projected trace: each letter holds the selected components in tuple
/// order.
using View = Lasso<std::vector<Symbol>>;

/// Nonempty subset of {HI, LI, HO, LO}.
class ComponentMask {
 public:
  ComponentMask(std::initializer_list<Component> components);
  static ComponentMask from_bits(std::uint8_t bits);

  static ComponentMask low() { return {Component::LowIn, Component::LowOut}; }
  static ComponentMask high() { return {Component::HighIn, Component::HighOut}; }
  static ComponentMask all() { return from_bits(0xF); }
  static ComponentMask only(Component c) { return {c}; }

  bool contains(Component c) const { return (bits_ >> static_cast<int>(c)) & 1U; }
  std::uint8_t bits() const { return bits_; }

  bool operator==(const ComponentMask&) const = default;

 private:
  ComponentMask() = default;
  std::uint8_t bits_ = 0;
};

/// Per-component finite alphabets.
struct Alphabets {
  std::array<std::vector<Symbol>, 4> symbols;

  static Alphabets binary();
  const std::vector<Symbol>& of(Component c) const { return symbols[static_cast<int>(c)]; }
  bool contains(Component c, const Symbol& s) const;
  bool operator==(const Alphabets&) const = default;
};

/// Bounds of an enumerable universe of lassos.
struct GeneratorParams {
  std::size_t max_prefix = 0;
  std::size_t max_cycle = 1;
  bool operator==(const GeneratorParams&) const = default;
};

/// The set of all possible traces: alphabets plus an optional explicit
/// universe.
class TraceSpace {
 public:
  explicit TraceSpace(Alphabets alphabets,
                      std::optional<std::vector<LassoTrace>> universe = std::nullopt,
                      std::optional<GeneratorParams> generator = std::nullopt);

  const Alphabets& alphabets() const { return alphabets_; }
  const std::optional<std::vector<LassoTrace>>& universe() const { return universe_; }
  const std::optional<GeneratorParams>& generator() const { return generator_; }

  /// Alphabet conformance and, if a universe is declared, membership.
  bool contains(const LassoTrace& t) const;
  /// Throws AlphabetError / SpaceMismatchError describing the violation.
  void require(const LassoTrace& t) const;

  /// Same alphabets and universe.
  bool compatible_with(const TraceSpace& other) const;

 private:
  Alphabets alphabets_;
  std::optional<std::vector<LassoTrace>> universe_;  // sorted
  std::optional<GeneratorParams> generator_;
};

using SpacePtr = std::shared_ptr<const TraceSpace>;

SpacePtr binary_space();

/// A finite set of traces over a trace space. Members are kept sorted.
class System {
 public:
  System() = default;

  /// Throws DuplicateTraceError on repeated traces, AlphabetError /
  /// SpaceMismatchError on traces outside the space.
  static System make(SpacePtr space, std::vector<LassoTrace> traces);

  const SpacePtr& space() const { return space_; }
  const std::vector<LassoTrace>& traces() const { return traces_; }
  std::size_t size() const { return traces_.size(); }
  bool empty() const { return traces_.empty(); }
  const LassoTrace& operator[](std::size_t i) const { return traces_[i]; }
  auto begin() const { return traces_.begin(); }
  auto end() const { return traces_.end(); }

  bool contains(const LassoTrace& t) const;
  /// Index of `t` in traces(), or nullopt.
  std::optional<std::size_t> index_of(const LassoTrace& t) const;

  bool operator==(const System& other) const { return traces_ == other.traces_; }

 private:
  SpacePtr space_;
  std::vector<LassoTrace> traces_;
};

/// Canonical lasso for `prefix . cycle^omega` (finite when `cycle` is empty).
LassoTrace canonicalize(std::vector<Tuple4> prefix, std::vector<Tuple4> cycle);
/// Same, rejecting symbols outside `alphabets`.
LassoTrace canonicalize(const Alphabets& alphabets, std::vector<Tuple4> prefix,
                        std::vector<Tuple4> cycle);

bool trace_eq(const LassoTrace& a, const LassoTrace& b);

View project(const LassoTrace& t, ComponentMask mask);

/// First `n` letters of the word (all of it when finite and shorter).
std::vector<Tuple4> prefix_of(const LassoTrace& t, std::size_t n);

/// `(0,1,1,1)(1,1,1,1)^ω` style rendering.
std::string to_string(const LassoTrace& t);
std::string to_string(const Tuple4& t);
std::string to_string(const System& s);

/// Interns views of the members of a system under a fixed mask so that view
/// equality becomes integer equality.
std::vector<std::uint32_t> intern_views(const System& s, ComponentMask mask);

/// Per-component view ids of every member of a system.
class ComponentIndex {
 public:
  explicit ComponentIndex(const System& s);
  std::size_t size() const { return ids_.size(); }
  std::uint32_t id(std::size_t trace, Component c) const {
    return ids_[trace][static_cast<int>(c)];
  }

 private:
  std::vector<std::array<std::uint32_t, 4>> ids_;
};

}  // namespace siflab
