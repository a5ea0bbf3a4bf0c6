#include "siflab/gen_sifs.hpp"

#include <algorithm>

namespace siflab {

std::optional<TraceSet> GenSif::operator()(const LassoTrace& a, const LassoTrace& b) const {
  if (const auto* l = std::get_if<LiftedSif>(&impl_)) {
    auto r = l->sif(a, b);
    if (!r) return std::nullopt;
    return TraceSet{*r};
  }
  if (const auto* e = std::get_if<ExtensionalGenSif>(&impl_)) {
    auto it = e->table.find({a, b});
    if (it == e->table.end() || it->second.empty()) return std::nullopt;
    return it->second;
  }
  const auto& c = std::get<ConjPair>(impl_);
  auto x = (*c.f)(a, b);
  if (!x) return std::nullopt;
  auto y = (*c.g)(a, b);
  if (!y) return std::nullopt;
  x->insert(y->begin(), y->end());
  return x;
}

GenSif lift(const Sif& f) { return GenSif(LiftedSif{f}); }

GenSif conj_pair(const GenSif& f, const GenSif& g) {
  return GenSif(ConjPair{std::make_shared<const GenSif>(f), std::make_shared<const GenSif>(g)});
}

GenSifFamily lift(const SifFamily& family) {
  std::vector<GenSif> out;
  out.reserve(family.members.size());
  for (const auto& f : family.members) out.push_back(lift(f));
  return GenSifFamily(std::move(out));
}

namespace {

// exists a member matching the type's copy constraints for the pair (a, b)
bool type_witness(const ComponentIndex& index, const SifType& t, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < index.size(); ++k) {
    bool ok = true;
    for (Component c : kAllComponents) {
      const Slot s = t.slot(c);
      if (s == Slot::Free) continue;
      if (index.id(k, c) != index.id(s == Slot::First ? a : b, c)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool closed_under_gen(const System& s, const GenSifFamily& family) {
  if (const auto* conj = family.types()) {
    const ComponentIndex index(s);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        if (!type_witness(index, conj->first, a, b) || !type_witness(index, conj->second, a, b))
          return false;
    return true;
  }
  const auto& members = *family.finite();
  for (const auto& a : s) {
    for (const auto& b : s) {
      bool ok = std::any_of(members.begin(), members.end(), [&](const GenSif& g) {
        auto out = g(a, b);
        return out && std::all_of(out->begin(), out->end(),
                                  [&](const LassoTrace& t) { return s.contains(t); });
      });
      if (!ok) return false;
    }
  }
  return true;
}

GenSifFamily conj_family(const SifType& first, const SifType& second) {
  return GenSifFamily(TypeConjunction{first, second});
}

GenSifFamily conj_family(const GenSifFamily& first, const GenSifFamily& second) {
  if (!first.finite() || !second.finite())
    throw PreconditionError("conjunction of a type with a finite family is not supported");
  std::vector<GenSif> out;
  out.reserve(first.finite()->size() * second.finite()->size());
  for (const auto& f : *first.finite())
    for (const auto& g : *second.finite()) out.push_back(conj_pair(f, g));
  return GenSifFamily(std::move(out));
}

GenSifFamily conj_family(const SifFamily& first, const SifFamily& second) {
  return conj_family(lift(first), lift(second));
}

GenSifFamily gen_family_union(const GenSifFamily& a, const GenSifFamily& b) {
  if (!a.finite() || !b.finite())
    throw PreconditionError("union is defined for finite generalized families");
  auto out = *a.finite();
  out.insert(out.end(), b.finite()->begin(), b.finite()->end());
  return GenSifFamily(std::move(out));
}

SifType gni_type() { return parse_type("1:2/0:2"); }
SifType rgni_type() { return parse_type("1:2/1:0"); }

}  // namespace siflab
