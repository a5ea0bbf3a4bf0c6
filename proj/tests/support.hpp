#pragma once

// Shared helpers and independent oracles for the test suites. Nothing here
// may call the library routine it is used to check.

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "siflab/io.hpp"
#include "siflab/trace.hpp"

namespace siflab::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SIFLAB_FIXTURES_DIR) / name;
}

/// "0101" -> (0,1,0,1)
inline Tuple4 tup(const std::string& s) {
  return {std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2]), std::string(1, s[3])};
}

/// Period-1 trace "(abcd)^ω".
inline LassoTrace p1(const std::string& s) { return canonicalize({}, {tup(s)}); }

inline System binary_system(const std::vector<LassoTrace>& traces) {
  return System::make(binary_space(), traces);
}

inline System p1_system(const std::vector<std::string>& letters) {
  std::vector<LassoTrace> ts;
  for (const auto& l : letters) ts.push_back(p1(l));
  return binary_system(ts);
}

/// Compares the first |p_a|+|p_b|+2·lcm(|c_a|,|c_b|) letters of two
/// infinite lassos given in any (non-canonical) form.
inline bool unroll_equal(const std::vector<Tuple4>& pa, const std::vector<Tuple4>& ca,
                         const std::vector<Tuple4>& pb, const std::vector<Tuple4>& cb) {
  auto letter = [](const std::vector<Tuple4>& p, const std::vector<Tuple4>& c, std::size_t i) {
    return i < p.size() ? p[i] : c[(i - p.size()) % c.size()];
  };
  const std::size_t n = pa.size() + pb.size() + 2 * std::lcm(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (letter(pa, ca, i) != letter(pb, cb, i)) return false;
  return true;
}

/// Letter-by-letter view equality up to a horizon long enough for lassos of
/// the given sizes.
inline bool same_components(const LassoTrace& a, const LassoTrace& b,
                            const std::vector<Component>& comps) {
  if (a.is_finite() != b.is_finite()) return false;
  std::size_t n;
  if (a.is_finite()) {
    if (a.finite_length() != b.finite_length()) return false;
    n = a.finite_length();
  } else {
    n = a.prefix().size() + b.prefix().size() + 2 * std::lcm(a.cycle().size(), b.cycle().size());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (Component c : comps)
      if (a.at(i)[static_cast<int>(c)] != b.at(i)[static_cast<int>(c)]) return false;
  return true;
}

/// Type closure straight from the definition, using letter-wise comparison.
/// `slots` as in the literal: (hi, li, ho, lo) with 0/1/2.
inline bool closure_oracle(const System& s, const std::array<int, 4>& slots) {
  for (const auto& a : s) {
    for (const auto& b : s) {
      bool found = std::any_of(s.begin(), s.end(), [&](const LassoTrace& c) {
        for (int k = 0; k < 4; ++k) {
          if (slots[k] == 0) continue;
          const auto& src = slots[k] == 1 ? a : b;
          if (!same_components(c, src, {static_cast<Component>(k)})) return false;
        }
        return true;
      });
      if (!found) return false;
    }
  }
  return true;
}

/// forall a, b exists c agreeing with a on `first` and with b on `second`.
inline bool view_oracle(const System& s, const std::vector<Component>& first,
                        const std::vector<Component>& second) {
  for (const auto& a : s)
    for (const auto& b : s) {
      bool found = std::any_of(s.begin(), s.end(), [&](const LassoTrace& c) {
        return same_components(c, a, first) && same_components(c, b, second);
      });
      if (!found) return false;
    }
  return true;
}

inline bool sep_oracle(const System& s) {
  return view_oracle(s, {Component::LowIn, Component::LowOut},
                     {Component::HighIn, Component::HighOut});
}
inline bool gni_oracle(const System& s) {
  return view_oracle(s, {Component::LowIn, Component::LowOut}, {Component::HighIn});
}
inline bool rgni_oracle(const System& s) {
  return view_oracle(s, {Component::HighIn, Component::HighOut}, {Component::LowIn});
}

/// Random lasso with prefix length <= max_prefix and cycle length 1..max_cycle
/// over binary symbols, not canonicalized.
struct RawLasso {
  std::vector<Tuple4> prefix, cycle;
};

inline RawLasso random_raw_lasso(std::mt19937_64& rng, std::size_t max_prefix,
                                 std::size_t max_cycle) {
  auto letter = [&] {
    Tuple4 t;
    for (auto& s : t) s = (rng() % 2) ? "1" : "0";
    return t;
  };
  RawLasso r;
  const std::size_t p = rng() % (max_prefix + 1);
  const std::size_t c = 1 + rng() % max_cycle;
  for (std::size_t i = 0; i < p; ++i) r.prefix.push_back(letter());
  for (std::size_t i = 0; i < c; ++i) r.cycle.push_back(letter());
  // repeat the cycle sometimes to exercise primitive-root reduction
  if (rng() % 3 == 0) {
    auto copy = r.cycle;
    r.cycle.insert(r.cycle.end(), copy.begin(), copy.end());
  }
  return r;
}

inline System random_p1_system(std::mt19937_64& rng, int percent = 50) {
  std::vector<LassoTrace> ts;
  for (int m = 0; m < 16; ++m) {
    if (static_cast<int>(rng() % 100) >= percent) continue;
    std::string l;
    for (int k = 3; k >= 0; --k) l += ((m >> k) & 1) ? '1' : '0';
    ts.push_back(p1(l));
  }
  return binary_system(ts);
}

/// For every member of the union and every protocol H, some trace of H
/// shows the same low view.
inline bool nos_oracle(const StrategySystem& ss) {
  for (const auto& t : ss.union_system())
    for (const auto& [name, fam] : ss.families()) {
      bool found = std::any_of(fam.begin(), fam.end(), [&](const LassoTrace& c) {
        return same_components(c, t, {Component::LowIn, Component::LowOut});
      });
      if (!found) return false;
    }
  return true;
}

// The PSP condition by enumerating every beta, e, alpha over the declared
// events up to the longest trace, independent of how traces are split.
inline bool psp_oracle(const AsyncSystem& s) {
  std::size_t longest = 0;
  for (const auto& t : s.traces()) longest = std::max(longest, t.size());
  std::vector<EventTrace> words{{}};
  for (std::size_t len = 1; len <= longest; ++len) {
    std::vector<EventTrace> next;
    for (const auto& w : words)
      if (w.size() == len - 1)
        for (const auto& e : s.events()) {
          auto x = w;
          x.push_back(e.name);
          next.push_back(std::move(x));
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& t : s.traces()) {
    EventTrace low;
    for (const auto& e : t)
      if (!s.is_high(e)) low.push_back(e);
    if (!s.contains(low)) return false;
  }
  for (const auto& beta : words)
    for (const auto& alpha : words) {
      if (std::any_of(alpha.begin(), alpha.end(), [&](const auto& e) { return s.is_high(e); }))
        continue;
      EventTrace ba = beta;
      ba.insert(ba.end(), alpha.begin(), alpha.end());
      if (!s.contains(ba)) continue;
      for (const auto& ev : s.events()) {
        if (ev.level != Level::High) continue;
        EventTrace be = beta;
        be.push_back(ev.name);
        if (!s.contains(be)) continue;
        EventTrace bea = be;
        bea.insert(bea.end(), alpha.begin(), alpha.end());
        if (!s.contains(bea)) return false;
      }
    }
  return true;
}

inline AsyncSystem random_async(std::mt19937_64& rng, std::size_t n_events, std::size_t max_len,
                         std::size_t max_traces) {
  std::vector<Event> events;
  for (std::size_t i = 0; i < n_events; ++i)
    events.push_back({"e" + std::to_string(i), rng() % 2 ? Level::High : Level::Low});
  std::set<EventTrace> traces;
  const std::size_t n = rng() % (max_traces + 1);
  for (std::size_t k = 0; k < n; ++k) {
    EventTrace t;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) t.push_back(events[rng() % n_events].name);
    traces.insert(t);
    // bias towards PSP-friendly systems by often adding the low projection
    if (rng() % 2) {
      EventTrace low;
      for (std::size_t i = 0; i < t.size(); ++i)
        for (const auto& e : events)
          if (e.name == t[i] && e.level == Level::Low) low.push_back(t[i]);
      traces.insert(low);
    }
  }
  return AsyncSystem::make(events, {traces.begin(), traces.end()});
}


}  // namespace siflab::test
