#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "siflab/properties.hpp"
#include "siflab/trace.hpp"

namespace siflab {

enum class Level { Low, High };

struct Event {
  std::string name;
  Level level = Level::Low;
};

/// A finite sequence of event names.
using EventTrace = std::vector<std::string>;

std::string to_string(const EventTrace& t);

/// An asynchronous system: declared events partitioned into L and H, and a
/// finite set of event traces.
class AsyncSystem {
 public:
  AsyncSystem() = default;

  /// Throws ParseError on duplicate or unknown event names and
  /// DuplicateTraceError on repeated traces.
  static AsyncSystem make(std::vector<Event> events, std::vector<EventTrace> traces);

  const std::vector<Event>& events() const { return events_; }
  const std::vector<EventTrace>& traces() const { return traces_; }
  std::size_t size() const { return traces_.size(); }
  bool contains(const EventTrace& t) const;
  Level level(const std::string& event) const;
  bool is_high(const std::string& event) const { return level(event) == Level::High; }

  /// Subsequence of low events.
  EventTrace low(const EventTrace& t) const;
  /// Subsequence of high events.
  EventTrace high(const EventTrace& t) const;

  bool operator==(const AsyncSystem& o) const { return traces_ == o.traces_; }

 private:
  std::vector<Event> events_;
  std::map<std::string, Level> levels_;
  std::vector<EventTrace> traces_;  // sorted
};

std::vector<LassoTrace> lles(const LassoTrace& t, const System& s);
std::vector<EventTrace> lles(const EventTrace& t, const AsyncSystem& s);

/// A predicate Q on finite trace sets (sets passed sorted).
template <class Trace>
class ZlPredicate {
 public:
  using Set = std::vector<Trace>;

  /// Holds exactly on the listed sets.
  static ZlPredicate accepting(std::set<Set> sets) {
    ZlPredicate q;
    q.name_ = "extensional";
    q.accepted_ = std::make_shared<const std::set<Set>>(std::move(sets));
    auto acc = q.accepted_;
    q.fn_ = [acc](const Set& s) { return acc->count(s) > 0; };
    return q;
  }

  static ZlPredicate always() { return of("true", [](const Set&) { return true; }); }

  static ZlPredicate of(std::string name, std::function<bool(const Set&)> fn) {
    ZlPredicate q;
    q.name_ = std::move(name);
    q.fn_ = std::move(fn);
    return q;
  }

  bool operator()(const Set& s) const { return fn_(s); }

  /// Pointwise conjunction.
  ZlPredicate operator&&(const ZlPredicate& other) const {
    auto f = fn_;
    auto g = other.fn_;
    return of("(" + name_ + " & " + other.name_ + ")",
              [f, g](const Set& s) { return f(s) && g(s); });
  }

  const std::string& name() const { return name_; }
  /// The accepted sets of an extensional predicate, null otherwise.
  const std::set<Set>* accepted() const { return accepted_.get(); }

 private:
  ZlPredicate() = default;
  std::string name_;
  std::function<bool(const Set&)> fn_;
  std::shared_ptr<const std::set<Set>> accepted_;
};

/// Q(A) holds iff A meets every Sigma_H.
ZlPredicate<LassoTrace> nos_predicate(const StrategySystem& ss);

namespace detail {

inline const std::vector<LassoTrace>& members(const System& s) { return s.traces(); }
inline const std::vector<EventTrace>& members(const AsyncSystem& s) { return s.traces(); }

template <class Sys>
using TraceOf = typename std::decay_t<decltype(members(std::declval<const Sys&>()))>::value_type;

}  // namespace detail

/// Q holds of LLES(sigma, s) for every member sigma.
template <class Sys>
bool zl_check(const Sys& s, const ZlPredicate<detail::TraceOf<Sys>>& q) {
  for (const auto& t : detail::members(s))
    if (!q(lles(t, s))) return false;
  return true;
}

/// Default bound on the number of distinct LLES sets a Q search will branch
/// over (2^bound assignments).
inline constexpr std::size_t kDefaultQSearchBits = 22;

/// Searches every assignment of Q over the distinct LLES sets of the
/// universe (and target) systems for one whose ZL property is exactly
/// `target`. Returns nullopt when none exists. Throws CapExceededError when
/// more than `max_bits` distinct sets arise.
template <class Sys>
std::optional<ZlPredicate<detail::TraceOf<Sys>>> zl_q_search(
    const std::vector<Sys>& target, const std::vector<Sys>& universe,
    std::size_t max_bits = kDefaultQSearchBits) {
  using Trace = detail::TraceOf<Sys>;
  using Set = std::vector<Trace>;

  std::vector<const Sys*> systems;
  std::vector<bool> wanted;
  auto in_target = [&](const Sys& s) {
    return std::find(target.begin(), target.end(), s) != target.end();
  };
  for (const auto& s : universe) {
    systems.push_back(&s);
    wanted.push_back(in_target(s));
  }
  for (const auto& s : target) {
    if (std::find(universe.begin(), universe.end(), s) == universe.end()) {
      systems.push_back(&s);
      wanted.push_back(true);
    }
  }

  std::map<Set, std::size_t> ids;
  std::vector<Set> sets;
  std::vector<std::uint64_t> required;
  for (const Sys* s : systems) {
    std::uint64_t need = 0;
    for (const auto& t : detail::members(*s)) {
      auto set = lles(t, *s);
      auto [it, inserted] = ids.emplace(set, sets.size());
      if (inserted) {
        sets.push_back(std::move(set));
        if (sets.size() > max_bits || sets.size() > 62)
          throw CapExceededError("Q search over more than " + std::to_string(max_bits) +
                                 " distinct LLES sets");
      }
      need |= std::uint64_t{1} << it->second;
    }
    required.push_back(need);
  }

  const std::uint64_t assignments = std::uint64_t{1} << sets.size();
  for (std::uint64_t q = 0; q < assignments; ++q) {
    bool ok = true;
    for (std::size_t i = 0; i < systems.size() && ok; ++i)
      ok = ((required[i] & ~q) == 0) == wanted[i];
    if (!ok) continue;
    std::set<Set> accepted;
    for (std::size_t k = 0; k < sets.size(); ++k)
      if ((q >> k) & 1U) accepted.insert(sets[k]);
    return ZlPredicate<Trace>::accepting(std::move(accepted));
  }
  return std::nullopt;
}

/// Perfect security property, decided by splitting every trace.
bool psp_check(const AsyncSystem& s);

/// beta e alpha when s2 = beta e with e high and s1 = beta alpha with alpha
/// low-only; the low projection of s1 otherwise.
EventTrace psp_sif(const AsyncSystem& decl, const EventTrace& s1, const EventTrace& s2);

/// Closure of the system under the single SIF psp_sif.
bool closed_under_psp_sif(const AsyncSystem& s);

}  // namespace siflab
