#ifndef WFADIS_WFA_HPP_
#define WFADIS_WFA_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wfadis/semiring.hpp"

namespace wfadis {

// States are dense ids 0..n-1; their numeric order is the total order used by
// transition removal.
using StateId = std::int32_t;
// Index into the automaton's alphabet.
using Label = std::int32_t;
// A string over the alphabet, as label indices.
using LabelString = std::vector<Label>;

struct Transition {
  StateId src = 0;
  Label label = 0;
  Weight weight;
  StateId dst = 0;

  friend bool operator==(const Transition &, const Transition &) = default;
};

// Canonical order: (src, label, dst, weight).
bool TransitionLess(const Transition &a, const Transition &b);

// An immutable weighted finite automaton (Sigma, Q, I, F, E, lambda, rho)
// without epsilon labels. The transition multiset is kept in canonical order;
// duplicates are allowed. Construction validates every invariant and throws
// UsageError on violation.
class Wfa {
 public:
  // alphabet: tokens, deduplicated and sorted on construction. Transition
  // labels index the *sorted* alphabet.
  Wfa(SemiringKind kind, std::vector<std::string> alphabet, StateId num_states,
      std::vector<Transition> transitions, std::map<StateId, Weight> initials,
      std::map<StateId, Weight> finals);

  // Empty automaton with no states.
  Wfa(SemiringKind kind, std::vector<std::string> alphabet)
      : Wfa(kind, std::move(alphabet), 0, {}, {}, {}) {}

  SemiringKind kind() const { return kind_; }
  const std::vector<std::string> &alphabet() const { return alphabet_; }
  StateId num_states() const { return num_states_; }
  const std::vector<Transition> &transitions() const { return transitions_; }
  const std::map<StateId, Weight> &initials() const { return initials_; }
  const std::map<StateId, Weight> &finals() const { return finals_; }

  // Outgoing transitions of q, in canonical order.
  std::span<const Transition> Out(StateId q) const;
  // Outgoing transitions of q labeled a.
  std::span<const Transition> Out(StateId q, Label a) const;
  bool IsInitial(StateId q) const { return initials_.contains(q); }
  bool IsFinal(StateId q) const { return finals_.contains(q); }

  // Label lookup. Throws UsageError for an unknown token.
  Label LabelOf(const std::string &token) const;
  LabelString Encode(std::span<const std::string> tokens) const;
  // Space-separated tokens; empty string for epsilon.
  std::string Decode(const LabelString &x) const;

  // |Q| + |E|.
  std::size_t Size() const { return num_states_ + transitions_.size(); }

 private:
  SemiringKind kind_;
  std::vector<std::string> alphabet_;
  StateId num_states_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> out_begin_;
  std::map<StateId, Weight> initials_;
  std::map<StateId, Weight> finals_;
};

// Incremental construction; labels are given as tokens and interned.
class WfaBuilder {
 public:
  explicit WfaBuilder(SemiringKind kind) : kind_(kind) {}

  SemiringKind kind() const { return kind_; }
  // Adds tokens to the alphabet even if no transition uses them.
  void AddSymbol(const std::string &token);
  StateId AddState();
  // Grows the state count to at least n.
  void ReserveStates(StateId n);
  void AddTransition(StateId src, const std::string &token, Weight w,
                     StateId dst);
  void AddTransition(StateId src, const std::string &token, std::int64_t w,
                     StateId dst) {
    AddTransition(src, token, Weight::Of(kind_, w), dst);
  }
  // Referencing a state id grows the state count to include it. Setting a
  // state initial (final) twice overwrites the weight.
  void SetInitial(StateId q, Weight w);
  void SetInitial(StateId q, std::int64_t w) {
    SetInitial(q, Weight::Of(kind_, w));
  }
  void SetFinal(StateId q, Weight w);
  void SetFinal(StateId q, std::int64_t w) { SetFinal(q, Weight::Of(kind_, w)); }

  Wfa Build() const;

 private:
  struct PendingTransition {
    StateId src;
    std::string token;
    Weight weight;
    StateId dst;
  };
  SemiringKind kind_;
  StateId num_states_ = 0;
  std::vector<std::string> symbols_;
  std::vector<PendingTransition> transitions_;
  std::map<StateId, Weight> initials_;
  std::map<StateId, Weight> finals_;
};

}  // namespace wfadis

#endif  // WFADIS_WFA_HPP_
