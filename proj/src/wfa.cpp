#include "wfadis/wfa.hpp"

#include <algorithm>

#include "wfadis/errors.hpp"

namespace wfadis {

bool TransitionLess(const Transition &a, const Transition &b) {
  if (a.src != b.src) return a.src < b.src;
  if (a.label != b.label) return a.label < b.label;
  if (a.dst != b.dst) return a.dst < b.dst;
  return a.weight < b.weight;
}

Wfa::Wfa(SemiringKind kind, std::vector<std::string> alphabet,
         StateId num_states, std::vector<Transition> transitions,
         std::map<StateId, Weight> initials, std::map<StateId, Weight> finals)
    : kind_(kind),
      alphabet_(std::move(alphabet)),
      num_states_(num_states),
      transitions_(std::move(transitions)),
      initials_(std::move(initials)),
      finals_(std::move(finals)) {
  if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
      std::adjacent_find(alphabet_.begin(), alphabet_.end()) !=
          alphabet_.end()) {
    throw UsageError("alphabet must be sorted and duplicate-free");
  }
  for (const auto &token : alphabet_) {
    if (token.empty() ||
        token.find_first_of(" \t\r\n") != std::string::npos) {
      throw UsageError("labels must be non-empty whitespace-free tokens");
    }
  }
  if (num_states_ < 0) throw UsageError("negative state count");
  auto check_state = [&](StateId q, const char *what) {
    if (q < 0 || q >= num_states_) {
      throw UsageError(std::string(what) + " refers to state " +
                       std::to_string(q) + " but the automaton has " +
                       std::to_string(num_states_) + " states");
    }
  };
  auto check_weight = [&](const Weight &w, const char *what) {
    if (w.kind() != kind_) {
      throw UsageError(std::string(what) + " weight has the wrong semiring");
    }
    if (w.is_zero()) {
      throw UsageError(std::string(what) + " weight is the semiring zero");
    }
  };
  for (const auto &t : transitions_) {
    check_state(t.src, "transition");
    check_state(t.dst, "transition");
    if (t.label < 0 || t.label >= static_cast<Label>(alphabet_.size())) {
      throw UsageError("transition label index out of range");
    }
    check_weight(t.weight, "transition");
  }
  for (const auto &[q, w] : initials_) {
    check_state(q, "initial");
    check_weight(w, "initial");
  }
  for (const auto &[q, w] : finals_) {
    check_state(q, "final");
    check_weight(w, "final");
  }
  std::sort(transitions_.begin(), transitions_.end(), TransitionLess);
  out_begin_.assign(num_states_ + 1, 0);
  for (const auto &t : transitions_) ++out_begin_[t.src + 1];
  for (StateId q = 0; q < num_states_; ++q) out_begin_[q + 1] += out_begin_[q];
}

std::span<const Transition> Wfa::Out(StateId q) const {
  return std::span<const Transition>(transitions_)
      .subspan(out_begin_[q], out_begin_[q + 1] - out_begin_[q]);
}

std::span<const Transition> Wfa::Out(StateId q, Label a) const {
  auto out = Out(q);
  auto lo = std::partition_point(out.begin(), out.end(),
                                 [a](const Transition &t) { return t.label < a; });
  auto hi = std::partition_point(lo, out.end(),
                                 [a](const Transition &t) { return t.label <= a; });
  return {lo, hi};
}

Label Wfa::LabelOf(const std::string &token) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), token);
  if (it == alphabet_.end() || *it != token) {
    throw UsageError("unknown label '" + token + "'");
  }
  return static_cast<Label>(it - alphabet_.begin());
}

LabelString Wfa::Encode(std::span<const std::string> tokens) const {
  LabelString x;
  x.reserve(tokens.size());
  for (const auto &t : tokens) x.push_back(LabelOf(t));
  return x;
}

std::string Wfa::Decode(const LabelString &x) const {
  std::string out;
  for (Label a : x) {
    if (!out.empty()) out += ' ';
    out += alphabet_.at(a);
  }
  return out;
}

void WfaBuilder::AddSymbol(const std::string &token) {
  symbols_.push_back(token);
}

StateId WfaBuilder::AddState() { return num_states_++; }

void WfaBuilder::ReserveStates(StateId n) {
  num_states_ = std::max(num_states_, n);
}

void WfaBuilder::AddTransition(StateId src, const std::string &token, Weight w,
                               StateId dst) {
  symbols_.push_back(token);
  ReserveStates(std::max(src, dst) + 1);
  transitions_.push_back({src, token, std::move(w), dst});
}

void WfaBuilder::SetInitial(StateId q, Weight w) {
  ReserveStates(q + 1);
  initials_.insert_or_assign(q, std::move(w));
}

void WfaBuilder::SetFinal(StateId q, Weight w) {
  ReserveStates(q + 1);
  finals_.insert_or_assign(q, std::move(w));
}

Wfa WfaBuilder::Build() const {
  std::vector<std::string> alphabet = symbols_;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  std::vector<Transition> transitions;
  transitions.reserve(transitions_.size());
  for (const auto &p : transitions_) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), p.token);
    transitions.push_back(
        {p.src, static_cast<Label>(it - alphabet.begin()), p.weight, p.dst});
  }
  return Wfa(kind_, std::move(alphabet), num_states_, std::move(transitions),
             initials_, finals_);
}

}  // namespace wfadis
