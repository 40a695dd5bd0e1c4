#ifndef WFADIS_RELATION_HPP_
#define WFADIS_RELATION_HPP_

#include <string_view>
#include <vector>

#include "wfadis/automata.hpp"
#include "wfadis/wfa.hpp"

namespace wfadis {

// A boolean relation over Q x Q stored as a dense matrix.
class Relation {
 public:
  explicit Relation(StateId n) : n_(n), bits_(static_cast<std::size_t>(n) * n) {}

  StateId size() const { return n_; }
  bool Contains(StateId p, StateId q) const {
    return bits_[static_cast<std::size_t>(p) * n_ + q];
  }
  void Set(StateId p, StateId q, bool value = true) {
    bits_[static_cast<std::size_t>(p) * n_ + q] = value;
  }
  // Sets both (p, q) and (q, p).
  void SetSymmetric(StateId p, StateId q) {
    Set(p, q);
    Set(q, p);
  }
  // True iff every pair of other is also in *this.
  bool Includes(const Relation &other) const;
  std::vector<StatePair> Pairs() const;

  friend bool operator==(const Relation &, const Relation &) = default;

 private:
  StateId n_;
  std::vector<bool> bits_;
};

// R*: p R* q iff some string leads both p and q to a final state. Computed by
// backward search over the label-synchronized pair graph from F x F. Throws
// UsageError when a is not trim.
Relation CommonFutureRelation(const Wfa &a);

// R0: every pair related.
Relation CompleteRelation(const Wfa &a);

struct AdmissibilityReport {
  bool ok = true;
  // Pairs of R* missing from R.
  std::vector<StatePair> missing;
  // (q, q') in R with equal-label predecessors (p, p') not in R; the entries
  // are the offending predecessor pairs.
  std::vector<StatePair> incompatible;
};

// Checks R includes R* and is compatible with the inverse transition function
// (one step suffices by induction). Throws UsageError when a is not trim or
// the relation size differs from the state count.
AdmissibilityReport ValidateAdmissible(const Wfa &a, const Relation &r);

// Parses lines "rel p q" (with '#' comments and blank lines); pairs are
// symmetrized. Throws ParseError on malformed lines or out-of-range states.
Relation ParseRelation(StateId num_states, std::string_view text);

}  // namespace wfadis

#endif  // WFADIS_RELATION_HPP_
