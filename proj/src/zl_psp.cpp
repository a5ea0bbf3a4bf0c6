#include "siflab/zl_psp.hpp"

namespace siflab {

std::string to_string(const EventTrace& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i];
  return out + ">";
}

AsyncSystem AsyncSystem::make(std::vector<Event> events, std::vector<EventTrace> traces) {
  AsyncSystem s;
  for (const auto& e : events) {
    if (!s.levels_.emplace(e.name, e.level).second)
      throw ParseError("event '" + e.name + "' declared twice");
  }
  for (const auto& t : traces)
    for (const auto& e : t)
      if (!s.levels_.count(e)) throw ParseError("undeclared event '" + e + "'");
  std::sort(traces.begin(), traces.end());
  auto dup = std::adjacent_find(traces.begin(), traces.end());
  if (dup != traces.end()) throw DuplicateTraceError("duplicate trace " + to_string(*dup));
  s.events_ = std::move(events);
  s.traces_ = std::move(traces);
  return s;
}

bool AsyncSystem::contains(const EventTrace& t) const {
  return std::binary_search(traces_.begin(), traces_.end(), t);
}

Level AsyncSystem::level(const std::string& event) const {
  auto it = levels_.find(event);
  if (it == levels_.end()) throw ParseError("undeclared event '" + event + "'");
  return it->second;
}

EventTrace AsyncSystem::low(const EventTrace& t) const {
  EventTrace out;
  for (const auto& e : t)
    if (level(e) == Level::Low) out.push_back(e);
  return out;
}

EventTrace AsyncSystem::high(const EventTrace& t) const {
  EventTrace out;
  for (const auto& e : t)
    if (level(e) == Level::High) out.push_back(e);
  return out;
}

std::vector<LassoTrace> lles(const LassoTrace& t, const System& s) {
  const auto low = ComponentMask::low();
  const View v = project(t, low);
  std::vector<LassoTrace> out;
  for (const auto& u : s)
    if (project(u, low) == v) out.push_back(u);
  return out;
}

std::vector<EventTrace> lles(const EventTrace& t, const AsyncSystem& s) {
  const EventTrace v = s.low(t);
  std::vector<EventTrace> out;
  for (const auto& u : s.traces())
    if (s.low(u) == v) out.push_back(u);
  return out;
}

ZlPredicate<LassoTrace> nos_predicate(const StrategySystem& ss) {
  auto families = ss.families();
  return ZlPredicate<LassoTrace>::of("NOS", [families](const std::vector<LassoTrace>& a) {
    for (const auto& [name, sys] : families) {
      bool meets = std::any_of(a.begin(), a.end(), [&](const LassoTrace& t) {
        return sys.contains(t);
      });
      if (!meets) return false;
    }
    return true;
  });
}

bool psp_check(const AsyncSystem& s) {
  std::vector<std::string> high_events;
  for (const auto& e : s.events())
    if (e.level == Level::High) high_events.push_back(e.name);

  for (const auto& sigma : s.traces()) {
    const EventTrace sigma_low = s.low(sigma);
    if (!s.contains(sigma_low)) return false;
    for (const auto& tau : s.traces()) {
      if (s.low(tau) != sigma_low) continue;
      // tau = beta alpha, split at every position with a low-only alpha
      for (std::size_t split = tau.size() + 1; split-- > 0;) {
        if (split < tau.size() && s.is_high(tau[split])) break;
        EventTrace beta(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(split));
        for (const auto& e : high_events) {
          EventTrace beta_e = beta;
          beta_e.push_back(e);
          if (!s.contains(beta_e)) continue;
          EventTrace inserted = beta_e;
          inserted.insert(inserted.end(), tau.begin() + static_cast<std::ptrdiff_t>(split),
                          tau.end());
          if (!s.contains(inserted)) return false;
        }
      }
    }
  }
  return true;
}

EventTrace psp_sif(const AsyncSystem& decl, const EventTrace& s1, const EventTrace& s2) {
  if (!s2.empty() && decl.is_high(s2.back()) && s2.size() - 1 <= s1.size() &&
      std::equal(s2.begin(), s2.end() - 1, s1.begin())) {
    const auto split = static_cast<std::ptrdiff_t>(s2.size() - 1);
    bool alpha_low = std::none_of(s1.begin() + split, s1.end(),
                                  [&](const std::string& e) { return decl.is_high(e); });
    if (alpha_low) {
      EventTrace out = s2;
      out.insert(out.end(), s1.begin() + split, s1.end());
      return out;
    }
  }
  return decl.low(s1);
}

bool closed_under_psp_sif(const AsyncSystem& s) {
  for (const auto& a : s.traces())
    for (const auto& b : s.traces())
      if (!s.contains(psp_sif(s, a, b))) return false;
  return true;
}

}  // namespace siflab
