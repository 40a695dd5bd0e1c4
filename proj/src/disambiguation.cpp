#include "wfadis/disambiguation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "graph.hpp"

namespace wfadis {
namespace {

// A' with removable transitions and finality.
class WorkingAutomaton {
 public:
  explicit WorkingAutomaton(const Wfa &a)
      : a_(a),
        transition_alive_(a.transitions().size(), true),
        final_alive_(a.num_states(), false) {
    for (const auto &[q, w] : a.finals()) final_alive_[q] = true;
  }

  const Wfa &base() const { return a_; }
  bool transition_alive(std::size_t i) const { return transition_alive_[i]; }
  bool final_alive(StateId q) const { return final_alive_[q]; }
  void RemoveTransition(std::size_t i) { transition_alive_[i] = false; }
  void RemoveFinality(StateId q) { final_alive_[q] = false; }

  // Normalized keys (min, max) of the co-reachable pairs.
  std::unordered_set<std::uint64_t> Coreachable() const {
    std::unordered_set<std::uint64_t> seen;
    std::vector<StatePair> queue;
    auto visit = [&](StateId u, StateId v) {
      if (u > v) std::swap(u, v);
      if (seen.insert(internal::PairKey(u, v)).second) queue.push_back({u, v});
    };
    for (const auto &[u, wu] : a_.initials()) {
      for (const auto &[v, wv] : a_.initials()) visit(u, v);
    }
    const Transition *base = a_.transitions().data();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [u, v] = queue[head];
      for (const auto &e1 : a_.Out(u)) {
        if (!transition_alive_[&e1 - base]) continue;
        for (const auto &e2 : a_.Out(v, e1.label)) {
          if (transition_alive_[&e2 - base]) visit(e1.dst, e2.dst);
        }
      }
    }
    return seen;
  }

  Wfa Current() const {
    std::vector<Transition> transitions;
    for (std::size_t i = 0; i < a_.transitions().size(); ++i) {
      if (transition_alive_[i]) transitions.push_back(a_.transitions()[i]);
    }
    std::map<StateId, Weight> finals;
    for (const auto &[q, w] : a_.finals()) {
      if (final_alive_[q]) finals.emplace(q, w);
    }
    return Wfa(a_.kind(), a_.alphabet(), a_.num_states(),
               std::move(transitions), a_.initials(), std::move(finals));
  }

 private:
  const Wfa &a_;
  std::vector<bool> transition_alive_;
  std::vector<bool> final_alive_;
};

bool Related(const std::unordered_set<std::uint64_t> &pairs, StateId u,
             StateId v) {
  if (u > v) std::swap(u, v);
  return pairs.contains(internal::PairKey(u, v));
}

// Transition indices grouped by (target, label); each group is sorted by
// source id. Groups come out in (target, label) order.
std::vector<std::vector<std::size_t>> TargetGroups(const Wfa &a) {
  std::map<std::pair<StateId, Label>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    const auto &t = a.transitions()[i];
    groups[{t.dst, t.label}].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto &[key, members] : groups) {
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      return a.transitions()[x].src < a.transitions()[y].src;
    });
    out.push_back(std::move(members));
  }
  return out;
}

// Distinct co-reachable A' states never share a head.
void CheckHeads(const PredisResult &predis, StateId u, StateId v) {
  if (u != v && predis.states[u].head == predis.states[v].head) {
    throw std::logic_error("co-reachable states " + std::to_string(u) + " and " +
                           std::to_string(v) + " share head " +
                           std::to_string(predis.states[u].head));
  }
}

// Generic list processing over items (transitions of one group, or final
// states), ordered ascending by source state.
template <typename SourceOf, typename IsAlive, typename Remove>
void ProcessList(const PredisResult &predis, WorkingAutomaton &work,
                 const RemovalOptions &options,
                 std::unordered_set<std::uint64_t> &coreachable,
                 std::size_t count, SourceOf source_of, IsAlive is_alive,
                 Remove remove) {
  for (std::size_t j = 1; j < count; ++j) {
    bool covered = false;
    for (std::size_t i = 0; i < j && !covered; ++i) {
      if (!options.relaxed && !is_alive(i)) continue;
      if (Related(coreachable, source_of(i), source_of(j))) {
        CheckHeads(predis, source_of(i), source_of(j));
        covered = true;
      }
    }
    if (!covered) continue;
    remove(j);
    if (options.recompute) coreachable = work.Coreachable();
    if (options.on_removal) options.on_removal(work.Current());
  }
}

}  // namespace

std::set<StatePair> CoreachablePairs(const Wfa &a) {
  std::set<StatePair> out;
  WorkingAutomaton work(a);
  for (std::uint64_t key : work.Coreachable()) {
    out.insert({static_cast<StateId>(key >> 32),
                static_cast<StateId>(key & 0xffffffffu)});
  }
  return out;
}

Wfa ProcessLists(const PredisResult &predis, const RemovalOptions &options) {
  const Wfa &a = predis.automaton;
  WorkingAutomaton work(a);
  auto coreachable = work.Coreachable();
  for (const auto &group : TargetGroups(a)) {
    ProcessList(
        predis, work, options, coreachable, group.size(),
        [&](std::size_t k) { return a.transitions()[group[k]].src; },
        [&](std::size_t k) { return work.transition_alive(group[k]); },
        [&](std::size_t k) { work.RemoveTransition(group[k]); });
  }
  std::vector<StateId> finals;
  for (const auto &[q, w] : a.finals()) finals.push_back(q);
  ProcessList(
      predis, work, options, coreachable, finals.size(),
      [&](std::size_t k) { return finals[k]; },
      [&](std::size_t k) { return work.final_alive(finals[k]); },
      [&](std::size_t k) { work.RemoveFinality(finals[k]); });
  return work.Current();
}

Wfa ProcessPairs(const PredisResult &predis, const RemovalOptions &options) {
  const Wfa &a = predis.automaton;
  WorkingAutomaton work(a);
  auto coreachable = work.Coreachable();
  std::vector<bool> needed_transition(a.transitions().size(), false);
  std::vector<bool> needed_final(a.num_states(), false);

  // Repeatedly resolves the eligible pair with the largest (higher head,
  // lower head) among items; returns when no eligible pair is left.
  auto resolve = [&](const std::vector<std::size_t> &items, auto source_of,
                     auto is_alive, auto remove, std::vector<bool> &needed) {
    for (;;) {
      bool found = false;
      std::size_t keep = 0, drop = 0;
      for (std::size_t x = 0; x < items.size(); ++x) {
        if (!is_alive(items[x])) continue;
        for (std::size_t y = x + 1; y < items.size(); ++y) {
          if (!is_alive(items[y])) continue;
          StateId u = source_of(items[x]), v = source_of(items[y]);
          if (u == v || !Related(coreachable, u, v)) continue;
          CheckHeads(predis, u, v);
          std::size_t hi = items[x], lo = items[y];
          if (predis.states[u].head < predis.states[v].head) std::swap(hi, lo);
          auto rank = [&](std::size_t h, std::size_t l) {
            return std::make_pair(predis.states[source_of(h)].head,
                                  predis.states[source_of(l)].head);
          };
          if (!found || rank(hi, lo) > rank(keep, drop)) {
            found = true;
            keep = hi;
            drop = lo;
          }
        }
      }
      if (!found) return;
      needed[keep] = true;
      if (needed[drop]) {
        throw std::logic_error("pair processing would remove a needed item");
      }
      remove(drop);
      if (options.recompute) coreachable = work.Coreachable();
      if (options.on_removal) options.on_removal(work.Current());
    }
  };

  for (const auto &group : TargetGroups(a)) {
    resolve(
        group, [&](std::size_t i) { return a.transitions()[i].src; },
        [&](std::size_t i) { return work.transition_alive(i); },
        [&](std::size_t i) { work.RemoveTransition(i); }, needed_transition);
  }
  std::vector<std::size_t> finals;
  for (const auto &[q, w] : a.finals()) finals.push_back(q);
  resolve(
      finals, [](std::size_t q) { return static_cast<StateId>(q); },
      [&](std::size_t q) { return work.final_alive(static_cast<StateId>(q)); },
      [&](std::size_t q) { work.RemoveFinality(static_cast<StateId>(q)); },
      needed_final);
  return work.Current();
}

Wfa Disambiguate(const Wfa &a, const Relation &r,
                 const DisambiguateOptions &options) {
  PredisResult predis = Predisambiguate(a, r, options.predis);
  Wfa removed = options.strategy == RemovalStrategy::kLists
                    ? ProcessLists(predis, options.removal)
                    : ProcessPairs(predis, options.removal);
  return Trim(removed);
}

}  // namespace wfadis
