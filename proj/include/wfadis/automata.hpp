#ifndef WFADIS_AUTOMATA_HPP_
#define WFADIS_AUTOMATA_HPP_

#include <set>
#include <utility>
#include <vector>

#include "wfadis/wfa.hpp"

namespace wfadis {

using StateSet = std::set<StateId>;
using StatePair = std::pair<StateId, StateId>;

// Path queries. Every label of x must index A's alphabet (UsageError
// otherwise).

// delta(U, x): endpoints of paths from U labeled x.
StateSet Delta(const Wfa &a, const StateSet &from, const LabelString &x);
// W(U, x, V): sum of the weights of paths from U to V labeled x; zero if none.
Weight WeightBetween(const Wfa &a, const StateSet &from, const LabelString &x,
                     const StateSet &to);
// W_I(x, V): as WeightBetween from I, with initial weights included.
Weight InitialWeightTo(const Wfa &a, const LabelString &x, const StateSet &to);
// A(x): sum over accepting paths of lambda * w[path] * rho.
Weight StringWeight(const Wfa &a, const LabelString &x);

StateSet InitialStates(const Wfa &a);
StateSet FinalStates(const Wfa &a);

std::vector<bool> Accessible(const Wfa &a);
std::vector<bool> Coaccessible(const Wfa &a);
bool IsTrim(const Wfa &a);
// Restriction to useful states, ids compacted preserving relative order.
Wfa Trim(const Wfa &a);

// Label-synchronized product over the accessible pair states. Weights are
// multiplied; every pair of equal-label transitions yields one product
// transition. Product states are numbered in lexicographic pair order; when
// pairs is non-null it receives the pair of each product state. Throws
// UsageError on kind or alphabet mismatch.
Wfa Product(const Wfa &a, const Wfa &b,
            std::vector<StatePair> *pairs = nullptr);
// Accessible pair states of the product, found by BFS without materializing
// any pair transition.
std::set<StatePair> AccessiblePairs(const Wfa &a, const Wfa &b);

// Negates every weight (tropical only; UnsupportedOperation otherwise).
Wfa NegateAutomaton(const Wfa &a);

// True iff no string labels two distinct accepting paths. Distinct members of
// the transition multiset count as distinct.
bool IsUnambiguous(const Wfa &a);
// True iff no state carries two distinct cycles with the same label string
// (equivalently: A is polynomially ambiguous).
bool IsCycleUnambiguous(const Wfa &a);
// At most one initial state and no two equal-label transitions leaving a
// state.
bool IsDeterministic(const Wfa &a);

}  // namespace wfadis

#endif  // WFADIS_AUTOMATA_HPP_
