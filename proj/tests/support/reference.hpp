// Independent reference computations for tests. Everything here works from
// the raw transition list by brute force and never calls the library's path
// queries, product, relation or construction code.
#ifndef WFADIS_TESTS_REFERENCE_HPP_
#define WFADIS_TESTS_REFERENCE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "wfadis/semiring.hpp"
#include "wfadis/wfa.hpp"

namespace ref {

using wfadis::Label;
using wfadis::LabelString;
using wfadis::StateId;
using wfadis::Weight;
using wfadis::Wfa;

struct Path {
  LabelString labels;
  StateId origin = 0;
  StateId end = 0;
  // lambda(origin) times the transition weights.
  Weight weight;
};

// Every path from an initial state with at most max_len transitions.
std::vector<Path> AllPaths(const Wfa &a, int max_len);

struct Entry {
  Weight weight;
  std::size_t paths = 0;
};

// Accepted strings up to max_len with their weight and accepting path count.
std::map<LabelString, Entry> Language(const Wfa &a, int max_len);

// x -> (p -> W_I(x, p)) for every |x| <= max_len.
std::map<LabelString, std::map<StateId, Weight>> PrefixWeights(const Wfa &a,
                                                               int max_len);

// p ~ q iff some string leads both to a final state, by naive fixpoint
// iteration over all pairs.
std::set<std::pair<StateId, StateId>> CommonFuture(const Wfa &a);

// States on a path from an initial state to a final state.
std::vector<bool> Useful(const Wfa &a);

// Number of accepting paths is at most one for every |x| <= max_len.
bool UnambiguousUpTo(const Wfa &a, int max_len);

// True iff the transition graph has a cycle.
bool HasCycle(const Wfa &a);

// Every string of length exactly n over labels [0, k).
std::vector<LabelString> AllStrings(int k, int n);

}  // namespace ref

#endif  // WFADIS_TESTS_REFERENCE_HPP_
