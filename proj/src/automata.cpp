#include "wfadis/automata.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "graph.hpp"
#include "wfadis/errors.hpp"

namespace wfadis {
namespace {

void CheckLabels(const Wfa &a, const LabelString &x) {
  for (Label l : x) {
    if (l < 0 || l >= static_cast<Label>(a.alphabet().size())) {
      throw UsageError("label index " + std::to_string(l) +
                       " is not in the alphabet");
    }
  }
}

void CheckCompatible(const Wfa &a, const Wfa &b, const char *op) {
  if (a.kind() != b.kind()) {
    throw UsageError(std::string(op) + ": semiring kind mismatch");
  }
  if (a.alphabet() != b.alphabet()) {
    throw UsageError(std::string(op) + ": alphabet mismatch");
  }
}

using WeightMap = std::map<StateId, Weight>;

void Accumulate(WeightMap &m, StateId q, const Weight &w) {
  auto [it, inserted] = m.try_emplace(q, w);
  if (!inserted) it->second = Plus(it->second, w);
}

// Forward weight propagation: for every state q, the sum over paths labeled
// x from the weighted start vector to q.
WeightMap Propagate(const Wfa &a, WeightMap current, const LabelString &x) {
  CheckLabels(a, x);
  for (Label l : x) {
    WeightMap next;
    for (const auto &[q, w] : current) {
      for (const auto &t : a.Out(q, l)) {
        Accumulate(next, t.dst, Times(w, t.weight));
      }
    }
    current = std::move(next);
  }
  return current;
}

Weight SumOver(const Wfa &a, const WeightMap &m, const StateSet &to) {
  Weight total = Weight::Zero(a.kind());
  for (const auto &[q, w] : m) {
    if (to.contains(q)) total = Plus(total, w);
  }
  return total;
}

// The transition-pair self-product restricted to useful pair states.
struct PairGraph {
  std::vector<StatePair> nodes;
  struct Edge {
    int from;
    int to;
    bool distinct;  // built from two distinct transitions
  };
  std::vector<Edge> edges;
  std::vector<bool> useful;
};

PairGraph BuildTransitionPairGraph(const Wfa &a) {
  PairGraph g;
  std::unordered_map<std::uint64_t, int> ids;
  auto intern = [&](StateId p, StateId q) {
    auto [it, inserted] =
        ids.try_emplace(internal::PairKey(p, q), static_cast<int>(g.nodes.size()));
    if (inserted) g.nodes.push_back({p, q});
    return it->second;
  };
  for (const auto &[p, wp] : a.initials()) {
    for (const auto &[q, wq] : a.initials()) intern(p, q);
  }
  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    auto [p, q] = g.nodes[head];
    for (const auto &e1 : a.Out(p)) {
      for (const auto &e2 : a.Out(q, e1.label)) {
        int to = intern(e1.dst, e2.dst);
        g.edges.push_back({static_cast<int>(head), to, &e1 != &e2});
      }
    }
  }
  std::vector<std::vector<int>> reverse(g.nodes.size());
  for (const auto &e : g.edges) reverse[e.to].push_back(e.from);
  std::vector<int> final_pairs;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (a.IsFinal(g.nodes[i].first) && a.IsFinal(g.nodes[i].second)) {
      final_pairs.push_back(static_cast<int>(i));
    }
  }
  g.useful = internal::Reachable(reverse, final_pairs);
  return g;
}

}  // namespace

StateSet Delta(const Wfa &a, const StateSet &from, const LabelString &x) {
  CheckLabels(a, x);
  StateSet current = from;
  for (Label l : x) {
    StateSet next;
    for (StateId q : current) {
      for (const auto &t : a.Out(q, l)) next.insert(t.dst);
    }
    current = std::move(next);
  }
  return current;
}

Weight WeightBetween(const Wfa &a, const StateSet &from, const LabelString &x,
                     const StateSet &to) {
  WeightMap start;
  for (StateId q : from) start.emplace(q, Weight::One(a.kind()));
  return SumOver(a, Propagate(a, std::move(start), x), to);
}

Weight InitialWeightTo(const Wfa &a, const LabelString &x, const StateSet &to) {
  return SumOver(a, Propagate(a, a.initials(), x), to);
}

Weight StringWeight(const Wfa &a, const LabelString &x) {
  Weight total = Weight::Zero(a.kind());
  for (const auto &[q, w] : Propagate(a, a.initials(), x)) {
    auto f = a.finals().find(q);
    if (f != a.finals().end()) total = Plus(total, Times(w, f->second));
  }
  return total;
}

StateSet InitialStates(const Wfa &a) {
  StateSet s;
  for (const auto &[q, w] : a.initials()) s.insert(q);
  return s;
}

StateSet FinalStates(const Wfa &a) {
  StateSet s;
  for (const auto &[q, w] : a.finals()) s.insert(q);
  return s;
}

std::vector<bool> Accessible(const Wfa &a) {
  std::vector<std::vector<int>> adj(a.num_states());
  for (const auto &t : a.transitions()) adj[t.src].push_back(t.dst);
  std::vector<int> seeds;
  for (const auto &[q, w] : a.initials()) seeds.push_back(q);
  return internal::Reachable(adj, seeds);
}

std::vector<bool> Coaccessible(const Wfa &a) {
  std::vector<std::vector<int>> adj(a.num_states());
  for (const auto &t : a.transitions()) adj[t.dst].push_back(t.src);
  std::vector<int> seeds;
  for (const auto &[q, w] : a.finals()) seeds.push_back(q);
  return internal::Reachable(adj, seeds);
}

bool IsTrim(const Wfa &a) {
  auto acc = Accessible(a);
  auto coacc = Coaccessible(a);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!acc[q] || !coacc[q]) return false;
  }
  return true;
}

Wfa Trim(const Wfa &a) {
  auto acc = Accessible(a);
  auto coacc = Coaccessible(a);
  std::vector<StateId> remap(a.num_states(), -1);
  StateId n = 0;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (acc[q] && coacc[q]) remap[q] = n++;
  }
  std::vector<Transition> transitions;
  for (const auto &t : a.transitions()) {
    if (remap[t.src] >= 0 && remap[t.dst] >= 0) {
      transitions.push_back({remap[t.src], t.label, t.weight, remap[t.dst]});
    }
  }
  std::map<StateId, Weight> initials, finals;
  for (const auto &[q, w] : a.initials()) {
    if (remap[q] >= 0) initials.emplace(remap[q], w);
  }
  for (const auto &[q, w] : a.finals()) {
    if (remap[q] >= 0) finals.emplace(remap[q], w);
  }
  return Wfa(a.kind(), a.alphabet(), n, std::move(transitions),
             std::move(initials), std::move(finals));
}

std::set<StatePair> AccessiblePairs(const Wfa &a, const Wfa &b) {
  CheckCompatible(a, b, "product");
  std::set<StatePair> seen;
  std::vector<StatePair> queue;
  for (const auto &[p, wp] : a.initials()) {
    for (const auto &[q, wq] : b.initials()) {
      if (seen.insert({p, q}).second) queue.push_back({p, q});
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [p, q] = queue[head];
    for (const auto &e1 : a.Out(p)) {
      for (const auto &e2 : b.Out(q, e1.label)) {
        if (seen.insert({e1.dst, e2.dst}).second) {
          queue.push_back({e1.dst, e2.dst});
        }
      }
    }
  }
  return seen;
}

Wfa Product(const Wfa &a, const Wfa &b, std::vector<StatePair> *pairs) {
  std::set<StatePair> accessible = AccessiblePairs(a, b);
  std::map<StatePair, StateId> id;
  for (const auto &pq : accessible) {
    id.emplace(pq, static_cast<StateId>(id.size()));
  }
  std::vector<Transition> transitions;
  std::map<StateId, Weight> initials, finals;
  for (const auto &[pq, s] : id) {
    auto [p, q] = pq;
    for (const auto &e1 : a.Out(p)) {
      for (const auto &e2 : b.Out(q, e1.label)) {
        transitions.push_back({s, e1.label, Times(e1.weight, e2.weight),
                               id.at({e1.dst, e2.dst})});
      }
    }
    auto ia = a.initials().find(p);
    auto ib = b.initials().find(q);
    if (ia != a.initials().end() && ib != b.initials().end()) {
      initials.emplace(s, Times(ia->second, ib->second));
    }
    auto fa = a.finals().find(p);
    auto fb = b.finals().find(q);
    if (fa != a.finals().end() && fb != b.finals().end()) {
      finals.emplace(s, Times(fa->second, fb->second));
    }
  }
  if (pairs != nullptr) pairs->assign(accessible.begin(), accessible.end());
  return Wfa(a.kind(), a.alphabet(), static_cast<StateId>(id.size()),
             std::move(transitions), std::move(initials), std::move(finals));
}

Wfa NegateAutomaton(const Wfa &a) {
  if (a.kind() != SemiringKind::kTropical) {
    throw UnsupportedOperation("negate_automaton requires a tropical automaton");
  }
  std::vector<Transition> transitions = a.transitions();
  for (auto &t : transitions) t.weight = Negate(t.weight);
  std::map<StateId, Weight> initials, finals;
  for (const auto &[q, w] : a.initials()) initials.emplace(q, Negate(w));
  for (const auto &[q, w] : a.finals()) finals.emplace(q, Negate(w));
  return Wfa(a.kind(), a.alphabet(), a.num_states(), std::move(transitions),
             std::move(initials), std::move(finals));
}

bool IsUnambiguous(const Wfa &a) {
  PairGraph g = BuildTransitionPairGraph(a);
  // Two zero-length accepting paths at distinct states show up as a useful
  // off-diagonal pair without any distinct edge.
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.useful[i] && g.nodes[i].first != g.nodes[i].second) return false;
  }
  for (const auto &e : g.edges) {
    if (e.distinct && g.useful[e.from] && g.useful[e.to]) return false;
  }
  return true;
}

bool IsCycleUnambiguous(const Wfa &a) {
  PairGraph g = BuildTransitionPairGraph(a);
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (const auto &e : g.edges) {
    if (g.useful[e.from] && g.useful[e.to]) adj[e.from].push_back(e.to);
  }
  std::vector<int> component = internal::StronglyConnectedComponents(adj);
  std::vector<bool> has_diagonal(g.nodes.size(), false);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.useful[i] && g.nodes[i].first == g.nodes[i].second) {
      has_diagonal[component[i]] = true;
    }
  }
  for (const auto &e : g.edges) {
    if (!e.distinct || !g.useful[e.from] || !g.useful[e.to]) continue;
    if (component[e.from] == component[e.to] && has_diagonal[component[e.from]]) {
      return false;
    }
  }
  return true;
}

bool IsDeterministic(const Wfa &a) {
  if (a.initials().size() > 1) return false;
  const auto &ts = a.transitions();
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (ts[i].src == ts[i - 1].src && ts[i].label == ts[i - 1].label) {
      return false;
    }
  }
  return true;
}

}  // namespace wfadis
