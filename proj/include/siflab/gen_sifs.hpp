#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "siflab/sif_families.hpp"
#include "siflab/sif_types.hpp"

namespace siflab {

using TraceSet = std::set<LassoTrace>;

class GenSif;

/// A SIF viewed as a generalized SIF with singleton outputs.
struct LiftedSif {
  Sif sif;
};

struct ExtensionalGenSif {
  std::map<std::pair<LassoTrace, LassoTrace>, TraceSet> table;
};

/// [f,g]: undefined where either side is, the union of both outputs
/// elsewhere.
struct ConjPair {
  std::shared_ptr<const GenSif> f;
  std::shared_ptr<const GenSif> g;
};

/// A partial map from trace pairs to nonempty finite trace sets.
class GenSif {
 public:
  using Variant = std::variant<LiftedSif, ExtensionalGenSif, ConjPair>;

  GenSif(Variant v) : impl_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  std::optional<TraceSet> operator()(const LassoTrace& a, const LassoTrace& b) const;
  const Variant& variant() const { return impl_; }

 private:
  Variant impl_;
};

GenSif lift(const Sif& f);
GenSif conj_pair(const GenSif& f, const GenSif& g);

/// All [f,g] with f of type `first` and g of type `second`. Kept symbolic;
/// a type is an infinite set of SIFs.
struct TypeConjunction {
  SifType first;
  SifType second;
};

/// A finite set of generalized SIFs or a symbolic conjunction of two types.
class GenSifFamily {
 public:
  explicit GenSifFamily(std::vector<GenSif> members) : impl_(std::move(members)) {}
  explicit GenSifFamily(TypeConjunction conj) : impl_(conj) {}

  const std::vector<GenSif>* finite() const { return std::get_if<std::vector<GenSif>>(&impl_); }
  const TypeConjunction* types() const { return std::get_if<TypeConjunction>(&impl_); }

 private:
  std::variant<std::vector<GenSif>, TypeConjunction> impl_;
};

GenSifFamily lift(const SifFamily& family);

/// For every pair of members some generalized SIF of the family is defined
/// there with all outputs inside the system.
bool closed_under_gen(const System& s, const GenSifFamily& family);

GenSifFamily conj_family(const SifType& first, const SifType& second);
/// Materializes every [f,g] with f from `first` and g from `second`.
GenSifFamily conj_family(const GenSifFamily& first, const GenSifFamily& second);
GenSifFamily conj_family(const SifFamily& first, const SifFamily& second);

/// Set union of two finite families.
GenSifFamily gen_family_union(const GenSifFamily& a, const GenSifFamily& b);

/// Representing type for GNI, and the one used for reverse GNI.
SifType gni_type();
SifType rgni_type();

}  // namespace siflab
