#include "wfadis/twins.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graph.hpp"
#include "wfadis/errors.hpp"
#include "wfadis/relation.hpp"

namespace wfadis {
namespace {

void CheckPreconditions(const Wfa &a, const char *op) {
  std::string name(op);
  if (a.kind() != SemiringKind::kTropical) {
    throw UsageError(name + ": requires a tropical automaton");
  }
  if (!IsTrim(a)) throw UsageError(name + ": requires a trim automaton");
  if (!IsCycleUnambiguous(a)) {
    throw UsageError(name +
                     ": requires a cycle-unambiguous (polynomially ambiguous) "
                     "automaton");
  }
}

// Edges from->to inside one component, found by BFS; empty when from == to.
std::vector<int> PathWithin(const std::vector<std::vector<int>> &out_edges,
                            const std::vector<WeightedEdge> &edges,
                            const std::vector<int> &component, int from,
                            int to) {
  std::map<int, int> via;  // node -> edge that reached it
  std::vector<int> queue{from};
  via[from] = -1;
  for (std::size_t head = 0; head < queue.size() && !via.contains(to); ++head) {
    for (int e : out_edges[queue[head]]) {
      int w = edges[e].to;
      if (component[w] != component[from] || via.contains(w)) continue;
      via[w] = e;
      queue.push_back(w);
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = edges[via.at(v)].from) path.push_back(via.at(v));
  std::reverse(path.begin(), path.end());
  return path;
}

CycleCheckReport CycleTest(const Wfa &a, bool trim_coaccessible) {
  std::vector<StatePair> pairs;
  Wfa product = Product(a, NegateAutomaton(a), &pairs);
  std::vector<bool> keep(product.num_states(), true);
  if (trim_coaccessible) keep = Coaccessible(product);
  std::vector<WeightedEdge> edges;
  std::vector<const Transition *> origin;
  for (const auto &t : product.transitions()) {
    if (!keep[t.src] || !keep[t.dst]) continue;
    edges.push_back({t.src, t.dst, t.weight.value()});
    origin.push_back(&t);
  }
  auto cycle = FindNonzeroCycle(product.num_states(), edges);
  if (!cycle) return {};
  CycleWitness witness{{}, {}, Weight::One(a.kind())};
  witness.states.push_back(pairs[edges[cycle->front()].from]);
  for (int e : *cycle) {
    witness.labels.push_back(origin[e]->label);
    witness.states.push_back(pairs[edges[e].to]);
    witness.weight = Times(witness.weight, origin[e]->weight);
  }
  return {false, std::move(witness)};
}

using WeightVector = std::vector<std::pair<StateId, Rational>>;

WeightVector MinPlusStep(const Wfa &a, const WeightVector &from, Label label,
                         const std::vector<bool> &allowed) {
  std::map<StateId, Rational> best;
  for (const auto &[u, w] : from) {
    for (const auto &t : a.Out(u, label)) {
      if (!allowed[t.dst]) continue;
      Rational v = w + t.weight.value();
      auto [it, inserted] = best.try_emplace(t.dst, v);
      if (!inserted && v < it->second) it->second = v;
    }
  }
  return WeightVector(best.begin(), best.end());
}

const Rational *Find(const WeightVector &v, StateId q) {
  for (const auto &[p, w] : v) {
    if (p == q) return &w;
  }
  return nullptr;
}

std::vector<bool> CanReach(const Wfa &a, StateId target) {
  std::vector<std::vector<int>> reverse(a.num_states());
  for (const auto &t : a.transitions()) reverse[t.dst].push_back(t.src);
  return internal::Reachable(reverse, {target});
}

// Compares W(p, y, p) and W(q, y, q) for all 1 <= |y| <= y_bound. Strings
// leading to the same pair of (jointly normalized) weight vectors have the
// same futures, so each configuration is expanded once.
bool TwinsUpTo(const Wfa &a, StateId p, StateId q, int y_bound) {
  const auto reach_p = CanReach(a, p);
  const auto reach_q = CanReach(a, q);
  using Config = std::pair<WeightVector, WeightVector>;
  std::set<Config> seen;
  std::vector<Config> frontier{{{{p, 0}}, {{q, 0}}}};
  seen.insert(frontier.front());
  for (int length = 1; length <= y_bound && !frontier.empty(); ++length) {
    std::vector<Config> next;
    for (const auto &[left, right] : frontier) {
      for (Label l = 0; l < static_cast<Label>(a.alphabet().size()); ++l) {
        WeightVector nl = MinPlusStep(a, left, l, reach_p);
        WeightVector nr = MinPlusStep(a, right, l, reach_q);
        if (nl.empty() || nr.empty()) continue;
        const Rational *cp = Find(nl, p);
        const Rational *cq = Find(nr, q);
        if (cp != nullptr && cq != nullptr && *cp != *cq) return false;
        Rational low = nl.front().second;
        for (const auto &[s, w] : nl) low = std::min(low, w);
        for (const auto &[s, w] : nr) low = std::min(low, w);
        for (auto &[s, w] : nl) w -= low;
        for (auto &[s, w] : nr) w -= low;
        Config c{std::move(nl), std::move(nr)};
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> FindNonzeroCycle(
    int num_nodes, const std::vector<WeightedEdge> &edges) {
  std::vector<std::vector<int>> adjacency(num_nodes), out_edges(num_nodes);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adjacency[edges[e].from].push_back(edges[e].to);
    out_edges[edges[e].from].push_back(e);
  }
  const std::vector<int> component =
      internal::StronglyConnectedComponents(adjacency);

  // Potentials phi(v) with phi(root) = 0 along a BFS tree of each component.
  std::vector<std::optional<Rational>> phi(num_nodes);
  std::vector<int> parent(num_nodes, -1);
  for (int root = 0; root < num_nodes; ++root) {
    if (phi[root]) continue;
    phi[root] = Rational(0);
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int e : out_edges[u]) {
        int v = edges[e].to;
        if (component[v] != component[u] || phi[v]) continue;
        phi[v] = *phi[u] + edges[e].weight;
        parent[v] = e;
        queue.push_back(v);
      }
    }
  }
  auto tree_path = [&](int v) {
    std::vector<int> path;
    for (; parent[v] >= 0; v = edges[parent[v]].from) path.push_back(parent[v]);
    std::reverse(path.begin(), path.end());
    return path;
  };
  auto total = [&](const std::vector<int> &walk) {
    Rational sum = 0;
    for (int e : walk) sum += edges[e].weight;
    return sum;
  };
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto &[u, v, w] = edges[e];
    if (component[u] != component[v] || *phi[u] + w == *phi[v]) continue;
    // Both walks close at the component root; their weights differ by
    // phi(u) + w - phi(v) != 0, so at least one is nonzero.
    int root = v;
    while (parent[root] >= 0) root = edges[parent[root]].from;
    std::vector<int> back = PathWithin(out_edges, edges, component, v, root);
    std::vector<int> through = tree_path(u);
    through.push_back(e);
    through.insert(through.end(), back.begin(), back.end());
    if (total(through) != 0) return through;
    std::vector<int> around = tree_path(v);
    around.insert(around.end(), back.begin(), back.end());
    return around;
  }
  return std::nullopt;
}

CycleCheckReport HasWeakTwins(const Wfa &a) {
  CheckPreconditions(a, "has_weak_twins");
  return CycleTest(a, /*trim_coaccessible=*/true);
}

CycleCheckReport HasTwins(const Wfa &a) {
  CheckPreconditions(a, "has_twins");
  return CycleTest(a, /*trim_coaccessible=*/false);
}

bool BruteForceWeakTwins(const Wfa &a, int x_bound, int y_bound) {
  if (a.kind() != SemiringKind::kTropical) {
    throw UsageError("brute_force_weak_twins: requires a tropical automaton");
  }
  if (!IsTrim(a)) {
    throw UsageError("brute_force_weak_twins: requires a trim automaton");
  }
  const Relation common_future = CommonFutureRelation(a);
  // Every delta(I, x) with |x| <= x_bound.
  std::set<StateSet> seen{InitialStates(a)};
  std::vector<StateSet> frontier{InitialStates(a)};
  std::set<StatePair> siblings;
  for (int depth = 0; !frontier.empty(); ++depth) {
    std::vector<StateSet> next;
    for (const auto &s : frontier) {
      for (StateId p : s) {
        for (StateId q : s) {
          if (p < q && common_future.Contains(p, q)) siblings.insert({p, q});
        }
      }
      if (depth == x_bound) continue;
      for (Label l = 0; l < static_cast<Label>(a.alphabet().size()); ++l) {
        StateSet d = Delta(a, s, {l});
        if (!d.empty() && seen.insert(d).second) next.push_back(std::move(d));
      }
    }
    frontier = std::move(next);
  }
  for (const auto &[p, q] : siblings) {
    if (!TwinsUpTo(a, p, q, y_bound)) return false;
  }
  return true;
}

bool BruteForceWeakTwins(const Wfa &a) {
  int bound = a.num_states() * a.num_states();
  return BruteForceWeakTwins(a, bound, bound);
}

}  // namespace wfadis
