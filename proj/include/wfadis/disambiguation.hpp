#ifndef WFADIS_DISAMBIGUATION_HPP_
#define WFADIS_DISAMBIGUATION_HPP_

#include <functional>
#include <set>

#include "wfadis/automata.hpp"
#include "wfadis/predisambiguation.hpp"
#include "wfadis/relation.hpp"
#include "wfadis/wfa.hpp"

namespace wfadis {

enum class RemovalStrategy { kLists, kPairs };

struct RemovalOptions {
  // Recompute co-reachability after every removal. When off, the pairs of
  // the untouched A' are used throughout (faster, not used for acceptance).
  bool recompute = true;
  // Lists only: remove as soon as an earlier co-reachable list member exists,
  // whether or not its transition (finality) survived.
  bool relaxed = false;
  // Called with the current, untrimmed automaton after each removal.
  std::function<void(const Wfa &)> on_removal;
};

// Unordered pairs {u, v} (stored with u <= v, diagonal included) of states
// reachable from the initial states by a common string.
std::set<StatePair> CoreachablePairs(const Wfa &a);

// Processes every list l(q0, s0, a), then the list of final states: a member
// loses its a-transition to the target (its finality) iff an earlier
// co-reachable member kept its own. Lists are ordered by A' id, i.e. by head.
// Returns the untrimmed result.
Wfa ProcessLists(const PredisResult &predis, const RemovalOptions &options = {});

// Pair strategy: for every co-reachable pair of distinct states sharing an
// a-transition to the same target (or both final), the state with the larger
// head is marked needed and the other loses its transition (finality).
// Needed transitions are never removed. Pairs are processed by descending
// larger head and rediscovered until none remain. Returns the untrimmed
// result.
Wfa ProcessPairs(const PredisResult &predis, const RemovalOptions &options = {});

struct DisambiguateOptions {
  RemovalStrategy strategy = RemovalStrategy::kLists;
  RemovalOptions removal;
  PredisOptions predis;
};

// Pre-disambiguation followed by transition removal and trimming. The result
// is unambiguous and equivalent to a. Propagates NotPredisambiguable.
Wfa Disambiguate(const Wfa &a, const Relation &r,
                 const DisambiguateOptions &options = {});

}  // namespace wfadis

#endif  // WFADIS_DISAMBIGUATION_HPP_
