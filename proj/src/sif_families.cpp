#include "siflab/sif_families.hpp"

#include <algorithm>

namespace siflab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::optional<LassoTrace> apply_zigzag(const ZigzagSif& z, const LassoTrace& a,
                                       const LassoTrace& b) {
  if (!z.target.contains(a) || !z.target.contains(b)) return std::nullopt;
  auto pos = [&](const LassoTrace& t) -> std::optional<std::size_t> {
    auto it = std::find(z.sigma_c.begin(), z.sigma_c.end(), t);
    if (it == z.sigma_c.end()) return std::nullopt;
    return static_cast<std::size_t>(it - z.sigma_c.begin()) + 1;  // 1-based
  };
  const auto i = pos(a);
  const auto j = pos(b);
  if (!i && !j) return z.sigma_c.front();
  if (i && !j) return a;
  if (!i && j) return b;
  const std::size_t k = z.sigma_c.size();
  // successor for even j, predecessor for odd j, wrapping in 1..k
  const std::size_t next = (*j % 2 == 0) ? (*i % k) + 1 : ((*i + k - 2) % k) + 1;
  return z.sigma_c[next - 1];
}

}  // namespace

std::optional<LassoTrace> Sif::operator()(const LassoTrace& a, const LassoTrace& b) const {
  return std::visit(
      overloaded{
          [&](const ExtensionalSif& e) -> std::optional<LassoTrace> {
            auto it = e.table.find({a, b});
            if (it == e.table.end()) return std::nullopt;
            return it->second;
          },
          [&](const NosMember& m) -> std::optional<LassoTrace> {
            const auto low = ComponentMask::low();
            if (project(m.sigma, low) != project(a, low)) return std::nullopt;
            if (!m.strategies->family(m.protocol).contains(b)) return std::nullopt;
            return m.sigma;
          },
          [&](const ZigzagSif& z) { return apply_zigzag(z, a, b); },
      },
      impl_);
}

std::string Sif::describe() const {
  return std::visit(overloaded{
                        [](const ExtensionalSif& e) {
                          return "table[" + std::to_string(e.table.size()) + "]";
                        },
                        [](const NosMember& m) {
                          return "f_{" + m.protocol + "," + to_string(m.sigma) + "}";
                        },
                        [](const ZigzagSif& z) { return "f_" + to_string(z.target); },
                    },
                    impl_);
}

bool closed_under_family(const System& s, const SifFamily& family) {
  for (const auto& a : s) {
    for (const auto& b : s) {
      bool ok = std::any_of(family.members.begin(), family.members.end(), [&](const Sif& f) {
        auto r = f(a, b);
        return r && s.contains(*r);
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool closed_under_one_member(const System& s, const SifFamily& family) {
  return std::any_of(family.members.begin(), family.members.end(), [&](const Sif& f) {
    for (const auto& a : s)
      for (const auto& b : s) {
        auto r = f(a, b);
        if (!r || !s.contains(*r)) return false;
      }
    return true;
  });
}

SifFamily nos_family(std::shared_ptr<const StrategySystem> ss) {
  if (!ss || !check_injectivity(*ss))
    throw PreconditionError("the NOS family needs an injective strategy system");
  SifFamily fam;
  for (const auto& [name, sys] : ss->families())
    for (const auto& sigma : sys) fam.members.emplace_back(NosMember{ss, name, sigma});
  return fam;
}

Sif zigzag_sif(const System& target, std::vector<LassoTrace> sigma_c) {
  if (sigma_c.empty()) throw PreconditionError("zigzag core must be nonempty");
  for (const auto& t : sigma_c)
    if (!target.contains(t))
      throw PreconditionError("zigzag core trace " + to_string(t) + " is not in the target");
  auto sorted = sigma_c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicateTraceError("zigzag core lists a trace twice");
  return Sif(ZigzagSif{target, std::move(sigma_c)});
}

SifFamily family_union(const SifFamily& a, const SifFamily& b) {
  SifFamily out = a;
  for (const auto& f : b.members)
    if (std::find(out.members.begin(), out.members.end(), f) == out.members.end())
      out.members.push_back(f);
  return out;
}

bool is_generating_core(std::span<const System> collection, const System& s,
                        std::span<const LassoTrace> core) {
  for (const auto& other : collection) {
    const bool strict_subset =
        other.size() < s.size() &&
        std::all_of(other.begin(), other.end(), [&](const LassoTrace& t) { return s.contains(t); });
    if (!strict_subset) continue;
    bool misses = std::any_of(core.begin(), core.end(),
                              [&](const LassoTrace& t) { return !other.contains(t); });
    if (!misses) return false;
  }
  return true;
}

bool family_represents(const SifFamily& family, const std::function<bool(const System&)>& property,
                       std::span<const System> universe) {
  return std::all_of(universe.begin(), universe.end(), [&](const System& s) {
    return property(s) == closed_under_family(s, family);
  });
}

bool pairwise_covered(const System& s, std::span<const System> covers) {
  std::vector<const System*> inside;
  for (const auto& c : covers)
    if (!(c == s) && std::all_of(c.begin(), c.end(), [&](const auto& t) { return s.contains(t); }))
      inside.push_back(&c);
  for (const auto& a : s)
    for (const auto& b : s)
      if (std::none_of(inside.begin(), inside.end(),
                       [&](const System* c) { return c->contains(a) && c->contains(b); }))
        return false;
  return true;
}

}  // namespace siflab
