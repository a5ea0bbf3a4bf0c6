#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "siflab/trace.hpp"

namespace siflab {

enum class PropertyKind { Sep, Gni, Rgni, Dgni };

const char* property_name(PropertyKind k);
/// Accepts "sep", "gni", "rgni", "dgni" (any case).
PropertyKind parse_property(std::string_view name);

/// SEP / GNI / RGNI as the forall-forall-exists view-compatibility formula;
/// DGNI as GNI and RGNI. The empty system satisfies all of them.
bool check_property(PropertyKind kind, const System& s);

/// A named family {Sigma_H} of trace sets generated by high protocols H,
/// together with their union.
class StrategySystem {
 public:
  StrategySystem() = default;

  /// Every family must be nonempty and all families must share one trace
  /// space. Injectivity is not enforced here; see check_injectivity().
  static StrategySystem make(std::map<std::string, System> families);

  const std::map<std::string, System>& families() const { return families_; }
  const System& family(const std::string& name) const;
  /// Sigma_H over all H, deduplicated.
  const System& union_system() const { return union_; }
  const SpacePtr& space() const { return union_.space(); }

  /// The strategy system over a subset of the protocol names.
  StrategySystem restrict_to(const std::vector<std::string>& names) const;

 private:
  std::map<std::string, System> families_;
  System union_;
};

/// Each Sigma_H has a trace that no other protocol generates.
bool check_injectivity(const StrategySystem& ss);

/// Nondeducibility on strategies over the union system. Throws
/// PreconditionError when the strategy system is not injective.
bool check_nos(const StrategySystem& ss);

}  // namespace siflab
