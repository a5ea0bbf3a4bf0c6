#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "siflab/properties.hpp"
#include "siflab/trace.hpp"

namespace siflab {

/// A finite table of (first, second) -> result entries; undefined elsewhere.
struct ExtensionalSif {
  std::map<std::pair<LassoTrace, LassoTrace>, LassoTrace> table;
  bool operator==(const ExtensionalSif&) const = default;
};

/// f_{H,sigma}: returns sigma when sigma agrees with the first argument on
/// the low view and the second argument was generated by H.
struct NosMember {
  std::shared_ptr<const StrategySystem> strategies;
  std::string protocol;
  LassoTrace sigma;
  bool operator==(const NosMember& o) const {
    return strategies == o.strategies && protocol == o.protocol && sigma == o.sigma;
  }
};

/// The SIF that makes `target` the only closed member of a collection
/// generated by the ordered core `sigma_c`.
struct ZigzagSif {
  System target;
  std::vector<LassoTrace> sigma_c;
  bool operator==(const ZigzagSif&) const = default;
};

/// A partial selective interleaving function on lasso traces.
class Sif {
 public:
  using Variant = std::variant<ExtensionalSif, NosMember, ZigzagSif>;

  Sif(Variant v) : impl_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  std::optional<LassoTrace> operator()(const LassoTrace& a, const LassoTrace& b) const;
  const Variant& variant() const { return impl_; }
  std::string describe() const;

  bool operator==(const Sif&) const = default;

 private:
  Variant impl_;
};

/// A finite set of SIFs.
struct SifFamily {
  std::vector<Sif> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

/// For every pair of members some SIF of the family is defined there and
/// lands back in the system. The empty system is closed under anything.
bool closed_under_family(const System& s, const SifFamily& family);

/// Stricter reading where one member of the family must serve every pair.
/// Implies closed_under_family; the converse fails in general.
bool closed_under_one_member(const System& s, const SifFamily& family);

/// {f_{H,sigma} : H a protocol, sigma in Sigma_H}. Throws PreconditionError
/// when the strategy system is not injective.
SifFamily nos_family(std::shared_ptr<const StrategySystem> ss);

/// The zigzag SIF for `target` with the finite ordered core `sigma_c`.
/// Throws PreconditionError when the core is empty or not inside the target.
Sif zigzag_sif(const System& target, std::vector<LassoTrace> sigma_c);

SifFamily family_union(const SifFamily& a, const SifFamily& b);

/// Core condition of a countably generated collection: every member of the
/// collection strictly below `s` misses some trace of `core`.
bool is_generating_core(std::span<const System> collection, const System& s,
                        std::span<const LassoTrace> core);

/// The family agrees with the property on every system of the universe.
bool family_represents(const SifFamily& family, const std::function<bool(const System&)>& property,
                       std::span<const System> universe);

/// True when every pair of `s` (diagonal included) lies inside one member of
/// `covers` that is a subsystem of `s`. Such an `s` is closed under any
/// family under which all of those members are closed, so no family can
/// accept the members while rejecting `s`.
bool pairwise_covered(const System& s, std::span<const System> covers);

}  // namespace siflab
