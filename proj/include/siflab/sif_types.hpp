#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siflab/properties.hpp"
#include "siflab/trace.hpp"

namespace siflab {

class SystemEnumeration;

/// Which argument a component of the interleaved trace is copied from.
enum class Slot : std::uint8_t { Free = 0, First = 1, Second = 2 };

/// A SIF type: one slot per component, ordered (in^H, in^L, out^H, out^L).
struct SifType {
  std::array<Slot, 4> slots{};

  Slot slot(Component c) const { return slots[static_cast<int>(c)]; }
  /// 0..80, base-3 digits in slot order.
  int index() const;
  static SifType from_index(int index);

  auto operator<=>(const SifType&) const = default;
  bool operator==(const SifType&) const = default;
};

/// Parses the `"a:b/c:d"` literal, e.g. `"1:2/0:2"`.
SifType parse_type(std::string_view literal);
std::string to_string(const SifType& t);

/// All 81 types in index order.
std::vector<SifType> enumerate_types();

/// Exchanges First and Second in every slot.
SifType swap_type(const SifType& t);

/// For every pair of members there is a member that agrees with the first
/// argument on First slots and with the second on Second slots.
bool closed_under_type(const System& s, const SifType& t);
bool closed_under_type(const ComponentIndex& index, const SifType& t);

/// The type agrees with the property on every system of the universe.
bool represents(const SifType& t, PropertyKind kind, std::span<const System> universe);
bool represents(const SifType& t, PropertyKind kind, const SystemEnumeration& universe);

/// A system to test a type against, with the property verdict already
/// decided. For strategy systems `system` is the union.
struct RefutationCandidate {
  std::string label;
  System system;
  bool satisfies = false;
};

enum class RefutationDirection {
  /// The property holds but the system is not closed under the type.
  HoldsButNotClosed,
  /// The system is closed under the type but the property fails.
  ClosedButFails,
};

const char* direction_name(RefutationDirection d);

struct TypeVerdict {
  SifType type;
  /// Unset when no candidate separates the property from the type.
  std::optional<std::string> witness;
  RefutationDirection direction = RefutationDirection::HoldsButNotClosed;
  bool from_extension = false;

  bool refuted() const { return witness.has_value(); }
};

struct RefutationReport {
  /// Indexed by SifType::index().
  std::vector<TypeVerdict> verdicts;
  /// Labels of extension candidates that refuted some type.
  std::vector<std::string> extension_used;

  std::size_t refuted_count() const;
  bool all_refuted() const { return refuted_count() == verdicts.size(); }
  std::vector<SifType> unrefuted() const;
};

/// Lazily supplies extension candidates; returns nullopt past the end.
using CandidateSource = std::function<std::optional<RefutationCandidate>(std::size_t)>;

/// Looks, for each of the 81 types, for the first pool member (then the
/// first extension member) on which property and closure disagree. Types
/// are handled per swap class and the verdict is mirrored to the swapped
/// type.
RefutationReport refute_all_types(std::span<const RefutationCandidate> pool,
                                  const CandidateSource& extension = {});

/// Convenience form for a predicate on plain systems.
RefutationReport refute_all_types(const std::function<bool(const System&)>& property,
                                  std::span<const System> pool,
                                  std::span<const std::string> labels = {},
                                  const SystemEnumeration* extension = nullptr);

/// The types closed on every system, swaps included.
std::vector<SifType> trivially_closing_types();

}  // namespace siflab
