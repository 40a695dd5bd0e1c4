#ifndef WFADIS_PREDISAMBIGUATION_HPP_
#define WFADIS_PREDISAMBIGUATION_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wfadis/automata.hpp"
#include "wfadis/relation.hpp"
#include "wfadis/wfa.hpp"

namespace wfadis {

// The weighted subset s(x, q): states reachable by x that are related to the
// head q, each with its residual weight relative to their sum. Kept sorted by
// state id and duplicate-free, which makes structural equality canonical.
class WeightedSubset {
 public:
  using Entry = std::pair<StateId, Weight>;

  WeightedSubset() = default;
  // entries need not be sorted; duplicate states are a UsageError.
  explicit WeightedSubset(std::vector<Entry> entries);

  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  StateSet Members() const;
  bool Contains(StateId p) const;
  // Residual of p; UsageError if p is not a member.
  const Weight &ResidualOf(StateId p) const;

  // "{p:w,...}" with canonical weights.
  std::string ToString() const;

  friend bool operator==(const WeightedSubset &, const WeightedSubset &) = default;
  friend std::strong_ordering operator<=>(const WeightedSubset &a,
                                          const WeightedSubset &b);

 private:
  std::vector<Entry> entries_;
};

// A state (q, s) of the pre-disambiguated automaton. Identity is structural.
struct PredisState {
  StateId head = 0;
  WeightedSubset subset;

  friend bool operator==(const PredisState &, const PredisState &) = default;
  friend std::strong_ordering operator<=>(const PredisState &a,
                                          const PredisState &b);
};

struct PredisOptions {
  std::size_t state_limit = 100000;
  // Verify every constructed subset is normalized and contains its head, and
  // that every successor set equals delta_{q'}(Set(s), a) recomputed from
  // scratch. Violations are counted, not thrown.
  bool check_invariants = false;
};

struct PredisResult {
  // A'. State i corresponds to states[i].
  Wfa automaton;
  // Sorted by (head, subset), so A' ids order the heads ascending.
  std::vector<PredisState> states;
  // One string reaching each state from an initial state (BFS-shortest).
  std::vector<LabelString> witnesses;
  // Filled when check_invariants is set.
  std::size_t checked_subsets = 0;
  std::size_t checked_transitions = 0;
  std::size_t invariant_violations = 0;
};

// R-pre-disambiguation of a by the subset construction with residual
// weights. Requires a trim and r admissible for a (the latter is the caller's
// responsibility; see ValidateAdmissible). Throws NotPredisambiguable once
// more than options.state_limit states have been created.
PredisResult Predisambiguate(const Wfa &a, const Relation &r,
                             const PredisOptions &options = {});

// One step of the construction: the transition weight from state by label to
// head q_prime, and the successor state. Throws UsageError if q_prime is not
// an a-successor of state.head.
std::pair<Weight, PredisState> SubsetSuccessor(const Wfa &a, const Relation &r,
                                               const PredisState &state,
                                               Label label, StateId q_prime);

// Diagnostic dump, one line per A' state:
//   state <id> head <q> subset {p:w,...} witness <tokens>
// An empty witness is written as <eps>.
std::string DumpPredisStates(const PredisResult &result);

}  // namespace wfadis

#endif  // WFADIS_PREDISAMBIGUATION_HPP_
