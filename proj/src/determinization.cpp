#include "wfadis/determinization.hpp"

#include <map>
#include <vector>

#include "wfadis/errors.hpp"

namespace wfadis {

Wfa Determinize(const Wfa &a, std::size_t state_limit) {
  if (a.kind() != SemiringKind::kTropical) {
    throw UnsupportedOperation("determinize supports the tropical semiring only");
  }
  const SemiringKind kind = a.kind();
  if (a.initials().empty()) return Wfa(kind, a.alphabet());

  using Subset = std::vector<std::pair<StateId, Weight>>;
  std::map<Subset, StateId> index;
  std::vector<Subset> subsets;
  std::vector<Transition> transitions;
  std::map<StateId, Weight> initials, finals;

  auto intern = [&](Subset s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (subsets.size() >= state_limit) {
      throw NotDeterminizedWithinLimit(state_limit);
    }
    StateId id = static_cast<StateId>(subsets.size());
    index.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  Weight start = Weight::Zero(kind);
  for (const auto &[q, w] : a.initials()) start = Plus(start, w);
  Subset initial;
  for (const auto &[q, w] : a.initials()) {
    initial.push_back({q, Residual(start, w)});
  }
  initials.emplace(intern(std::move(initial)), start);

  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (Label label = 0; label < static_cast<Label>(a.alphabet().size());
         ++label) {
      std::map<StateId, Weight> reached;
      for (const auto &[p, v] : subsets[head]) {
        for (const auto &t : a.Out(p, label)) {
          Weight w = Times(v, t.weight);
          auto [it, inserted] = reached.try_emplace(t.dst, w);
          if (!inserted) it->second = Plus(it->second, w);
        }
      }
      if (reached.empty()) continue;
      Weight w = Weight::Zero(kind);
      for (const auto &[q, v] : reached) w = Plus(w, v);
      Subset next;
      for (const auto &[q, v] : reached) next.push_back({q, Residual(w, v)});
      StateId dst = intern(std::move(next));
      transitions.push_back({static_cast<StateId>(head), label, w, dst});
    }
  }
  for (std::size_t id = 0; id < subsets.size(); ++id) {
    Weight rho = Weight::Zero(kind);
    for (const auto &[p, v] : subsets[id]) {
      auto f = a.finals().find(p);
      if (f != a.finals().end()) rho = Plus(rho, Times(v, f->second));
    }
    if (!rho.is_zero()) finals.emplace(static_cast<StateId>(id), rho);
  }
  return Wfa(kind, a.alphabet(), static_cast<StateId>(subsets.size()),
             std::move(transitions), std::move(initials), std::move(finals));
}

}  // namespace wfadis
