#include "wfadis/predisambiguation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wfadis/errors.hpp"

namespace wfadis {
namespace {

// W(p, a, p') for every state p and label a, summed over parallel
// transitions; entries sorted by destination.
using StepTable = std::vector<std::vector<std::vector<std::pair<StateId, Weight>>>>;

StepTable BuildStepTable(const Wfa &a) {
  StepTable table(a.num_states(),
                  std::vector<std::vector<std::pair<StateId, Weight>>>(
                      a.alphabet().size()));
  // Transitions are sorted by (src, label, dst), so parallel ones are adjacent.
  for (const auto &t : a.transitions()) {
    auto &row = table[t.src][t.label];
    if (!row.empty() && row.back().first == t.dst) {
      row.back().second = Plus(row.back().second, t.weight);
    } else {
      row.push_back({t.dst, t.weight});
    }
  }
  return table;
}

std::pair<Weight, PredisState> Step(const Wfa &a, const StepTable &table,
                                    const Relation &r, const PredisState &from,
                                    Label label, StateId q_prime) {
  // v_j = sum_i w_i * W(p_i, a, p'_j) over the related successors p'_j.
  std::map<StateId, Weight> sums;
  for (const auto &[p, w] : from.subset.entries()) {
    for (const auto &[dst, step] : table[p][label]) {
      if (!r.Contains(dst, q_prime)) continue;
      Weight v = Times(w, step);
      auto [it, inserted] = sums.try_emplace(dst, v);
      if (!inserted) it->second = Plus(it->second, v);
    }
  }
  Weight total = Weight::Zero(a.kind());
  for (const auto &[p, v] : sums) total = Plus(total, v);
  std::vector<WeightedSubset::Entry> entries;
  entries.reserve(sums.size());
  for (const auto &[p, v] : sums) entries.push_back({p, Residual(total, v)});
  return {total, PredisState{q_prime, WeightedSubset(std::move(entries))}};
}

bool HasSuccessor(const StepTable &table, StateId q, Label label,
                  StateId q_prime) {
  const auto &row = table[q][label];
  return std::any_of(row.begin(), row.end(),
                     [&](const auto &e) { return e.first == q_prime; });
}

void CheckPreconditions(const Wfa &a, const Relation &r) {
  if (r.size() != a.num_states()) {
    throw UsageError("relation size does not match the automaton");
  }
  if (!IsTrim(a)) {
    throw UsageError("predisambiguate: automaton is not trim; trim it first");
  }
}

}  // namespace

WeightedSubset::WeightedSubset(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry &x, const Entry &y) { return x.first < y.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first) {
      throw UsageError("weighted subset lists state " +
                       std::to_string(entries_[i].first) + " twice");
    }
  }
}

StateSet WeightedSubset::Members() const {
  StateSet s;
  for (const auto &[p, w] : entries_) s.insert(p);
  return s;
}

bool WeightedSubset::Contains(StateId p) const {
  return std::binary_search(
      entries_.begin(), entries_.end(), Entry{p, Weight()},
      [](const Entry &x, const Entry &y) { return x.first < y.first; });
}

const Weight &WeightedSubset::ResidualOf(StateId p) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), p,
      [](const Entry &x, StateId q) { return x.first < q; });
  if (it == entries_.end() || it->first != p) {
    throw UsageError("state " + std::to_string(p) + " is not in the subset");
  }
  return it->second;
}

std::string WeightedSubset::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i].first) + ':' +
           entries_[i].second.ToString();
  }
  return out + "}";
}

std::strong_ordering operator<=>(const WeightedSubset &a,
                                 const WeightedSubset &b) {
  return std::lexicographical_compare_three_way(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
      b.entries_.end(),
      [](const WeightedSubset::Entry &x, const WeightedSubset::Entry &y) {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

std::strong_ordering operator<=>(const PredisState &a, const PredisState &b) {
  if (auto c = a.head <=> b.head; c != 0) return c;
  return a.subset <=> b.subset;
}

std::pair<Weight, PredisState> SubsetSuccessor(const Wfa &a, const Relation &r,
                                               const PredisState &state,
                                               Label label, StateId q_prime) {
  if (r.size() != a.num_states()) {
    throw UsageError("relation size does not match the automaton");
  }
  if (label < 0 || label >= static_cast<Label>(a.alphabet().size())) {
    throw UsageError("label index out of range");
  }
  StepTable table = BuildStepTable(a);
  if (state.head < 0 || state.head >= a.num_states() ||
      !HasSuccessor(table, state.head, label, q_prime)) {
    throw UsageError("state " + std::to_string(q_prime) +
                     " is not a successor of the head by that label");
  }
  return Step(a, table, r, state, label, q_prime);
}

PredisResult Predisambiguate(const Wfa &a, const Relation &r,
                             const PredisOptions &options) {
  CheckPreconditions(a, r);
  if (options.state_limit < 1) throw UsageError("state_limit must be >= 1");
  const SemiringKind kind = a.kind();
  const StepTable table = BuildStepTable(a);

  std::vector<PredisState> states;
  std::vector<LabelString> witnesses;
  std::map<PredisState, StateId> index;
  struct Edge {
    StateId src;
    Label label;
    Weight weight;
    StateId dst;
  };
  std::vector<Edge> edges;
  std::map<StateId, Weight> initials;
  std::size_t checked_subsets = 0, checked_transitions = 0, violations = 0;

  auto check_subset = [&](const PredisState &s) {
    ++checked_subsets;
    Weight total = Weight::Zero(kind);
    for (const auto &[p, w] : s.subset.entries()) {
      if (w.is_zero()) ++violations;
      total = Plus(total, w);
    }
    if (!total.is_one() || !s.subset.Contains(s.head)) ++violations;
  };
  auto intern = [&](PredisState s, const LabelString &witness) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (states.size() >= options.state_limit) {
      throw NotPredisambiguable(options.state_limit);
    }
    if (options.check_invariants) check_subset(s);
    StateId id = static_cast<StateId>(states.size());
    index.emplace(s, id);
    states.push_back(std::move(s));
    witnesses.push_back(witness);
    return id;
  };

  // I' = {(q, s(eps, q)) : q in I}; lambda' is the sum of the member lambdas.
  for (const auto &[q, lambda_q] : a.initials()) {
    Weight total = Weight::Zero(kind);
    for (const auto &[p, lambda_p] : a.initials()) {
      if (r.Contains(p, q)) total = Plus(total, lambda_p);
    }
    std::vector<WeightedSubset::Entry> entries;
    for (const auto &[p, lambda_p] : a.initials()) {
      if (r.Contains(p, q)) entries.push_back({p, Residual(total, lambda_p)});
    }
    StateId id = intern(PredisState{q, WeightedSubset(std::move(entries))}, {});
    initials.emplace(id, total);
  }

  for (std::size_t head = 0; head < states.size(); ++head) {
    for (Label label = 0; label < static_cast<Label>(a.alphabet().size());
         ++label) {
      // Copy: states may reallocate while interning successors.
      const PredisState from = states[head];
      for (const auto &[q_prime, unused] : table[from.head][label]) {
        auto [w, next] = Step(a, table, r, from, label, q_prime);
        if (options.check_invariants) {
          ++checked_transitions;
          StateSet expected;
          for (StateId p : Delta(a, from.subset.Members(), {label})) {
            if (r.Contains(p, q_prime)) expected.insert(p);
          }
          if (expected != next.subset.Members()) ++violations;
        }
        LabelString witness = witnesses[head];
        witness.push_back(label);
        StateId dst = intern(std::move(next), witness);
        edges.push_back({static_cast<StateId>(head), label, w, dst});
      }
    }
  }

  // Renumber by (head, subset).
  std::vector<StateId> order(states.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](StateId x, StateId y) { return states[x] < states[y]; });
  std::vector<StateId> rank(states.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<StateId>(i);
  }

  PredisResult result{Wfa(kind, a.alphabet()), {}, {}, checked_subsets,
                      checked_transitions, violations};
  result.states.reserve(states.size());
  result.witnesses.reserve(states.size());
  for (StateId old : order) {
    result.states.push_back(states[old]);
    result.witnesses.push_back(witnesses[old]);
  }
  std::vector<Transition> transitions;
  transitions.reserve(edges.size());
  for (auto &e : edges) {
    transitions.push_back({rank[e.src], e.label, std::move(e.weight), rank[e.dst]});
  }
  std::map<StateId, Weight> new_initials, finals;
  for (auto &[id, w] : initials) new_initials.emplace(rank[id], w);
  for (StateId id = 0; id < static_cast<StateId>(result.states.size()); ++id) {
    const PredisState &s = result.states[id];
    if (!a.IsFinal(s.head)) continue;
    // rho'((q, s)) = sum over final members of w_i * rho(p_i).
    Weight rho = Weight::Zero(kind);
    for (const auto &[p, w] : s.subset.entries()) {
      auto f = a.finals().find(p);
      if (f != a.finals().end()) rho = Plus(rho, Times(w, f->second));
    }
    finals.emplace(id, rho);
  }
  result.automaton = Wfa(kind, a.alphabet(),
                         static_cast<StateId>(result.states.size()),
                         std::move(transitions), std::move(new_initials),
                         std::move(finals));
  return result;
}

std::string DumpPredisStates(const PredisResult &result) {
  std::string out;
  for (std::size_t i = 0; i < result.states.size(); ++i) {
    const auto &s = result.states[i];
    std::string witness = result.automaton.Decode(result.witnesses[i]);
    out += "state " + std::to_string(i) + " head " + std::to_string(s.head) +
           " subset " + s.subset.ToString() + " witness " +
           (witness.empty() ? "<eps>" : witness) + "\n";
  }
  return out;
}

}  // namespace wfadis
