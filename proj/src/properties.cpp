#include "siflab/properties.hpp"

#include <algorithm>
#include <cctype>

namespace siflab {

const char* property_name(PropertyKind k) {
  switch (k) {
    case PropertyKind::Sep: return "SEP";
    case PropertyKind::Gni: return "GNI";
    case PropertyKind::Rgni: return "RGNI";
    case PropertyKind::Dgni: return "DGNI";
  }
  return "?";
}

PropertyKind parse_property(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sep") return PropertyKind::Sep;
  if (lower == "gni") return PropertyKind::Gni;
  if (lower == "rgni") return PropertyKind::Rgni;
  if (lower == "dgni") return PropertyKind::Dgni;
  throw ParseError("unknown property '" + std::string(name) + "'");
}

namespace {

// forall s1, s2 exists s: s|first = s1|first and s|second = s2|second
bool view_compatible(const System& s, ComponentMask from_first, ComponentMask from_second) {
  const auto first = intern_views(s, from_first);
  const auto second = intern_views(s, from_second);
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool found = false;
      for (std::size_t k = 0; k < n && !found; ++k)
        found = first[k] == first[a] && second[k] == second[b];
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool check_property(PropertyKind kind, const System& s) {
  const auto low = ComponentMask::low();
  const auto high = ComponentMask::high();
  switch (kind) {
    case PropertyKind::Sep:
      return view_compatible(s, low, high);
    case PropertyKind::Gni:
      return view_compatible(s, low, ComponentMask::only(Component::HighIn));
    case PropertyKind::Rgni:
      return view_compatible(s, high, ComponentMask::only(Component::LowIn));
    case PropertyKind::Dgni:
      return check_property(PropertyKind::Gni, s) && check_property(PropertyKind::Rgni, s);
  }
  return false;
}

StrategySystem StrategySystem::make(std::map<std::string, System> families) {
  if (families.empty()) throw PreconditionError("strategy system needs at least one protocol");
  SpacePtr space = families.begin()->second.space();
  std::vector<LassoTrace> all;
  for (const auto& [name, sys] : families) {
    if (sys.empty())
      throw PreconditionError("protocol '" + name + "' generates no trace");
    if (!sys.space()->compatible_with(*space))
      throw SpaceMismatchError("protocol '" + name + "' uses a different trace space");
    all.insert(all.end(), sys.begin(), sys.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  StrategySystem ss;
  ss.families_ = std::move(families);
  ss.union_ = System::make(space, std::move(all));
  return ss;
}

const System& StrategySystem::family(const std::string& name) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw PreconditionError("unknown protocol '" + name + "'");
  return it->second;
}

StrategySystem StrategySystem::restrict_to(const std::vector<std::string>& names) const {
  std::map<std::string, System> sub;
  for (const auto& n : names) sub.emplace(n, family(n));
  return make(std::move(sub));
}

bool check_injectivity(const StrategySystem& ss) {
  for (const auto& [name, sys] : ss.families()) {
    bool has_own = std::any_of(sys.begin(), sys.end(), [&](const LassoTrace& t) {
      for (const auto& [other, osys] : ss.families())
        if (other != name && osys.contains(t)) return false;
      return true;
    });
    if (!has_own) return false;
  }
  return true;
}

bool check_nos(const StrategySystem& ss) {
  if (!check_injectivity(ss))
    throw PreconditionError("NOS is only defined for injective strategy systems");
  const auto low = ComponentMask::low();
  for (const auto& t : ss.union_system()) {
    const View v = project(t, low);
    for (const auto& [name, sys] : ss.families()) {
      bool compatible = std::any_of(sys.begin(), sys.end(),
                                    [&](const LassoTrace& u) { return project(u, low) == v; });
      if (!compatible) return false;
    }
  }
  return true;
}

}  // namespace siflab
