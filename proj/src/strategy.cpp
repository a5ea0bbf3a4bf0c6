#include "siflab/strategy.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace siflab {

GenerationMode GenerationMode::bounded(std::size_t n) {
  if (n == 0) throw PreconditionError("bounded generation needs n >= 1");
  return {Kind::Bounded, n};
}

namespace {

struct JointState {
  std::string sys, low, high;
  auto operator<=>(const JointState&) const = default;
};

struct Edge {
  Tuple4 letter;
  JointState next;
  auto operator<=>(const Edge&) const = default;
};

class Composition {
 public:
  Composition(const SystemProtocol& s, const UserProtocol& l, const UserProtocol& h,
              const SpacePtr& space)
      : sys_(s), low_(l), high_(h), space_(space) {}

  JointState initial() const { return {sys_.initial, low_.initial, high_.initial}; }

  // distinct (letter, successor) pairs, sorted
  std::vector<Edge> successors(const JointState& q) const {
    std::set<Edge> out;
    const auto& his = lookup(high_.emit, q.high, "high emission");
    const auto& lis = lookup(low_.emit, q.low, "low emission");
    for (const auto& hi : his) require_symbol(Component::HighIn, hi);
    for (const auto& li : lis) require_symbol(Component::LowIn, li);
    for (const auto& hi : his)
      for (const auto& li : lis)
        for (const auto& [ho, lo] :
             lookup(sys_.output, std::make_tuple(q.sys, hi, li), "system output")) {
          Tuple4 letter{hi, li, ho, lo};
          for (Component c : kAllComponents)
            if (!space_->alphabets().contains(c, letter[static_cast<int>(c)]))
              throw AlphabetError("protocol emits '" + letter[static_cast<int>(c)] +
                                  "' outside the " + component_name(c) + " alphabet");
          JointState next{
              lookup(sys_.update, std::make_tuple(q.sys, hi, li, ho, lo), "system update"),
              lookup(low_.update, std::make_tuple(q.low, li, lo), "low update"),
              lookup(high_.update, std::make_tuple(q.high, hi, ho), "high update")};
          out.insert({letter, next});
        }
    return {out.begin(), out.end()};
  }

 private:
  void require_symbol(Component c, const Symbol& x) const {
    if (!space_->alphabets().contains(c, x))
      throw AlphabetError("protocol emits '" + x + "' outside the " + component_name(c) +
                          " alphabet");
  }

  template <class Map, class Key>
  static const typename Map::mapped_type& lookup(const Map& m, const Key& k, const char* what) {
    auto it = m.find(k);
    if (it == m.end()) throw PreconditionError(std::string(what) + " is undefined for a state");
    if constexpr (std::is_same_v<typename Map::mapped_type, std::vector<Symbol>> ||
                  std::is_same_v<typename Map::mapped_type,
                                 std::vector<std::pair<Symbol, Symbol>>>) {
      if (it->second.empty()) throw PreconditionError(std::string(what) + " set is empty");
    }
    return it->second;
  }

  const SystemProtocol& sys_;
  const UserProtocol& low_;
  const UserProtocol& high_;
  const SpacePtr& space_;
};

// Rejects reachable cycles that carry a choice.
void require_deterministic_cycles(const std::map<JointState, std::vector<Edge>>& graph) {
  // Tarjan's SCC
  std::map<JointState, int> index, lowlink;
  std::set<JointState> on_stack;
  std::vector<JointState> stack;
  int counter = 0;

  std::function<void(const JointState&)> visit = [&](const JointState& v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const auto& e : graph.at(v)) {
      if (!index.count(e.next)) {
        visit(e.next);
        lowlink[v] = std::min(lowlink[v], lowlink[e.next]);
      } else if (on_stack.count(e.next)) {
        lowlink[v] = std::min(lowlink[v], index[e.next]);
      }
    }
    if (lowlink[v] != index[v]) return;
    std::vector<JointState> scc;
    JointState w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack.erase(w);
      scc.push_back(w);
    } while (!(w == v));
    const auto& edges = graph.at(v);
    bool cyclic = scc.size() > 1 ||
                  std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.next == v; });
    if (!cyclic) return;
    for (const auto& q : scc)
      if (graph.at(q).size() > 1)
        throw RunExplosionError(
            "nondeterministic choice on a reachable cycle: infinitely many runs");
  };
  for (const auto& [q, edges] : graph)
    if (!index.count(q)) visit(q);
}

}  // namespace

System generate_sigma_h(const SystemProtocol& system, const UserProtocol& low,
                        const UserProtocol& high, GenerationMode mode, SpacePtr space) {
  Composition comp(system, low, high, space);
  std::set<LassoTrace> traces;

  if (mode.kind == GenerationMode::Kind::Bounded) {
    std::vector<Tuple4> path;
    std::function<void(const JointState&)> run = [&](const JointState& q) {
      if (path.size() == mode.bound) {
        traces.insert(canonicalize(path, {}));
        return;
      }
      for (const auto& e : comp.successors(q)) {
        path.push_back(e.letter);
        run(e.next);
        path.pop_back();
      }
    };
    run(comp.initial());
    return System::make(std::move(space), {traces.begin(), traces.end()});
  }

  // reachable joint-state graph
  std::map<JointState, std::vector<Edge>> graph;
  std::vector<JointState> frontier{comp.initial()};
  while (!frontier.empty()) {
    JointState q = frontier.back();
    frontier.pop_back();
    if (graph.count(q)) continue;
    auto edges = comp.successors(q);
    for (const auto& e : edges)
      if (!graph.count(e.next)) frontier.push_back(e.next);
    graph.emplace(std::move(q), std::move(edges));
  }
  require_deterministic_cycles(graph);

  std::vector<JointState> states;
  std::vector<Tuple4> letters;
  std::function<void(const JointState&)> run = [&](const JointState& q) {
    auto seen = std::find(states.begin(), states.end(), q);
    if (seen != states.end()) {
      auto p = seen - states.begin();
      traces.insert(canonicalize({letters.begin(), letters.begin() + p},
                                 {letters.begin() + p, letters.end()}));
      return;
    }
    states.push_back(q);
    for (const auto& e : graph.at(q)) {
      letters.push_back(e.letter);
      run(e.next);
      letters.pop_back();
    }
    states.pop_back();
  };
  run(comp.initial());
  return System::make(std::move(space), {traces.begin(), traces.end()});
}

StrategyBuild build_strategy_system(const SystemProtocol& system, const UserProtocol& low,
                                    const std::map<std::string, UserProtocol>& highs,
                                    GenerationMode mode, SpacePtr space) {
  std::map<std::string, System> families;
  for (const auto& [name, h] : highs)
    families.emplace(name, generate_sigma_h(system, low, h, mode, space));
  StrategyBuild out{StrategySystem::make(std::move(families)), false};
  out.injective = check_injectivity(out.strategies);
  return out;
}

}  // namespace siflab
