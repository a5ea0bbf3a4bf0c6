#include "siflab/sif_types.hpp"

#include <algorithm>

#include "siflab/enumerate.hpp"

namespace siflab {

int SifType::index() const {
  int i = 0;
  for (Slot s : slots) i = i * 3 + static_cast<int>(s);
  return i;
}

SifType SifType::from_index(int index) {
  if (index < 0 || index >= 81) throw PreconditionError("type index out of range");
  SifType t;
  for (int k = 3; k >= 0; --k) {
    t.slots[k] = static_cast<Slot>(index % 3);
    index /= 3;
  }
  return t;
}

SifType parse_type(std::string_view literal) {
  // a:b/c:d
  if (literal.size() != 7 || literal[1] != ':' || literal[3] != '/' || literal[5] != ':')
    throw ParseError("type literal must look like \"a:b/c:d\", got \"" + std::string(literal) +
                     "\"");
  SifType t;
  const int pos[4] = {0, 2, 4, 6};
  for (int k = 0; k < 4; ++k) {
    char ch = literal[pos[k]];
    if (ch < '0' || ch > '2')
      throw ParseError("type slots must be 0, 1 or 2 in \"" + std::string(literal) + "\"");
    t.slots[k] = static_cast<Slot>(ch - '0');
  }
  return t;
}

std::string to_string(const SifType& t) {
  auto d = [&](int k) { return static_cast<char>('0' + static_cast<int>(t.slots[k])); };
  return {d(0), ':', d(1), '/', d(2), ':', d(3)};
}

std::vector<SifType> enumerate_types() {
  std::vector<SifType> out;
  out.reserve(81);
  for (int i = 0; i < 81; ++i) out.push_back(SifType::from_index(i));
  return out;
}

SifType swap_type(const SifType& t) {
  SifType out = t;
  for (Slot& s : out.slots) {
    if (s == Slot::First)
      s = Slot::Second;
    else if (s == Slot::Second)
      s = Slot::First;
  }
  return out;
}

bool closed_under_type(const ComponentIndex& index, const SifType& t) {
  // A witness for (a, b) must carry a's First components and b's Second
  // components. Every member contributes one such (first key, second key)
  // pair, so the system is closed iff these pairs cover the full product of
  // the distinct first keys and the distinct second keys.
  constexpr std::uint32_t kUnused = 0xFFFFFFFFU;
  using Key = std::array<std::uint32_t, 4>;
  const std::size_t n = index.size();
  std::vector<Key> firsts, seconds;
  std::vector<std::pair<Key, Key>> pairs;
  firsts.reserve(n);
  seconds.reserve(n);
  pairs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Key f{kUnused, kUnused, kUnused, kUnused};
    Key g = f;
    for (Component c : kAllComponents) {
      const int i = static_cast<int>(c);
      if (t.slot(c) == Slot::First) f[i] = index.id(k, c);
      if (t.slot(c) == Slot::Second) g[i] = index.id(k, c);
    }
    firsts.push_back(f);
    seconds.push_back(g);
    pairs.emplace_back(f, g);
  }
  auto distinct = [](auto& v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  return distinct(pairs) == distinct(firsts) * distinct(seconds);
}

bool closed_under_type(const System& s, const SifType& t) {
  return closed_under_type(ComponentIndex(s), t);
}

bool represents(const SifType& t, PropertyKind kind, std::span<const System> universe) {
  return std::all_of(universe.begin(), universe.end(), [&](const System& s) {
    return check_property(kind, s) == closed_under_type(s, t);
  });
}

bool represents(const SifType& t, PropertyKind kind, const SystemEnumeration& universe) {
  for (std::uint64_t i = 0; i < universe.size(); ++i) {
    const System s = universe[i];
    if (check_property(kind, s) != closed_under_type(s, t)) return false;
  }
  return true;
}

const char* direction_name(RefutationDirection d) {
  switch (d) {
    case RefutationDirection::HoldsButNotClosed: return "property holds, not closed";
    case RefutationDirection::ClosedButFails: return "closed, property fails";
  }
  return "?";
}

std::size_t RefutationReport::refuted_count() const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.refuted(); }));
}

std::vector<SifType> RefutationReport::unrefuted() const {
  std::vector<SifType> out;
  for (const auto& v : verdicts)
    if (!v.refuted()) out.push_back(v.type);
  return out;
}

namespace {

struct IndexedCandidate {
  const RefutationCandidate* candidate;
  ComponentIndex index;
};

bool disagrees(const IndexedCandidate& c, const SifType& t) {
  return c.candidate->satisfies != closed_under_type(c.index, t);
}

}  // namespace

RefutationReport refute_all_types(std::span<const RefutationCandidate> pool,
                                  const CandidateSource& extension) {
  RefutationReport report;
  report.verdicts.resize(81);
  for (int i = 0; i < 81; ++i) report.verdicts[i].type = SifType::from_index(i);

  std::vector<IndexedCandidate> indexed;
  indexed.reserve(pool.size());
  for (const auto& c : pool) indexed.push_back({&c, ComponentIndex(c.system)});

  std::vector<SifType> open;
  for (const auto& t : enumerate_types())
    if (t.index() <= swap_type(t).index()) open.push_back(t);  // one per swap class

  auto record = [&](const SifType& t, const RefutationCandidate& c, bool from_ext) {
    for (const SifType& u : {t, swap_type(t)}) {
      auto& v = report.verdicts[u.index()];
      v.witness = c.label;
      v.direction = c.satisfies ? RefutationDirection::HoldsButNotClosed
                                : RefutationDirection::ClosedButFails;
      v.from_extension = from_ext;
    }
  };

  std::vector<SifType> remaining;
  for (const auto& t : open) {
    auto it = std::find_if(indexed.begin(), indexed.end(),
                           [&](const IndexedCandidate& c) { return disagrees(c, t); });
    if (it != indexed.end())
      record(t, *it->candidate, false);
    else
      remaining.push_back(t);
  }

  if (extension) {
    for (std::size_t i = 0; !remaining.empty(); ++i) {
      auto next = extension(i);
      if (!next) break;
      IndexedCandidate c{&*next, ComponentIndex(next->system)};
      bool used = false;
      std::erase_if(remaining, [&](const SifType& t) {
        if (!disagrees(c, t)) return false;
        record(t, *next, true);
        used = true;
        return true;
      });
      if (used) report.extension_used.push_back(next->label);
    }
  }
  return report;
}

RefutationReport refute_all_types(const std::function<bool(const System&)>& property,
                                  std::span<const System> pool,
                                  std::span<const std::string> labels,
                                  const SystemEnumeration* extension) {
  std::vector<RefutationCandidate> candidates;
  candidates.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::string label = i < labels.size() ? labels[i] : "pool[" + std::to_string(i) + "]";
    candidates.push_back({std::move(label), pool[i], property(pool[i])});
  }
  CandidateSource source;
  if (extension) {
    source = [&](std::size_t i) -> std::optional<RefutationCandidate> {
      if (i >= extension->size()) return std::nullopt;
      System s = (*extension)[i];
      std::string label = to_string(s);
      bool holds = property(s);
      return RefutationCandidate{std::move(label), std::move(s), holds};
    };
  }
  return refute_all_types(candidates, source);
}

std::vector<SifType> trivially_closing_types() {
  // every slot Free or First, plus the swapped forms
  std::vector<SifType> out;
  for (const auto& t : enumerate_types()) {
    bool no_second = std::none_of(t.slots.begin(), t.slots.end(),
                                  [](Slot s) { return s == Slot::Second; });
    bool no_first = std::none_of(t.slots.begin(), t.slots.end(),
                                 [](Slot s) { return s == Slot::First; });
    if (no_second || no_first) out.push_back(t);
  }
  return out;
}

}  // namespace siflab
