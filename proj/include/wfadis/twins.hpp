#ifndef WFADIS_TWINS_HPP_
#define WFADIS_TWINS_HPP_

#include <optional>
#include <vector>

#include "wfadis/automata.hpp"
#include "wfadis/semiring.hpp"
#include "wfadis/wfa.hpp"

namespace wfadis {

// A closed walk in A x (-A): states[0] == states.back(), labels[i] leads from
// states[i] to states[i + 1]; weight is its (nonzero) total.
struct CycleWitness {
  std::vector<StatePair> states;
  LabelString labels;
  Weight weight;
};

struct CycleCheckReport {
  bool holds = true;
  std::optional<CycleWitness> witness;
};

// Weak twins test: every cycle of Trim(A x (-A)) has weight 0. Requires a
// tropical, trim, cycle-unambiguous automaton; throws UsageError naming the
// failed precondition otherwise.
CycleCheckReport HasWeakTwins(const Wfa &a);

// Classic twins test: the same cycle condition on the accessible part of
// A x (-A), without co-accessibility trimming. Same preconditions.
CycleCheckReport HasTwins(const Wfa &a);

// Bounded refuter for the weak twins property, by enumeration: collects the
// pairs p R* q reachable together by some |x| <= x_bound and compares
// W(p, y, p) with W(q, y, q) for every |y| <= y_bound with cycles at both.
// Returns false on the first violation. Requires tropical and trim.
bool BruteForceWeakTwins(const Wfa &a, int x_bound, int y_bound);
// Both bounds |Q|^2.
bool BruteForceWeakTwins(const Wfa &a);

// Potential test on a weighted digraph: returns the edge indices of a closed
// walk of nonzero total weight, or nullopt when every cycle weighs zero.
struct WeightedEdge {
  int from;
  int to;
  Rational weight;
};
std::optional<std::vector<int>> FindNonzeroCycle(
    int num_nodes, const std::vector<WeightedEdge> &edges);

}  // namespace wfadis

#endif  // WFADIS_TWINS_HPP_
