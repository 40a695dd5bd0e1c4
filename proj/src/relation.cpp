#include "wfadis/relation.hpp"

#include <set>
#include <sstream>
#include <string>

#include "wfadis/errors.hpp"

namespace wfadis {
namespace {

void RequireTrim(const Wfa &a, const char *op) {
  if (!IsTrim(a)) {
    throw UsageError(std::string(op) +
                     ": automaton is not trim; trim it first");
  }
}

}  // namespace

bool Relation::Includes(const Relation &other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (other.bits_[i] && !bits_[i]) return false;
  }
  return true;
}

std::vector<StatePair> Relation::Pairs() const {
  std::vector<StatePair> out;
  for (StateId p = 0; p < n_; ++p) {
    for (StateId q = 0; q < n_; ++q) {
      if (Contains(p, q)) out.push_back({p, q});
    }
  }
  return out;
}

Relation CommonFutureRelation(const Wfa &a) {
  RequireTrim(a, "common_future_relation");
  const StateId n = a.num_states();
  // Incoming transitions grouped by (destination, label).
  std::vector<std::vector<std::vector<StateId>>> in(
      n, std::vector<std::vector<StateId>>(a.alphabet().size()));
  for (const auto &t : a.transitions()) in[t.dst][t.label].push_back(t.src);
  Relation r(n);
  std::vector<StatePair> queue;
  for (const auto &[p, wp] : a.finals()) {
    for (const auto &[q, wq] : a.finals()) {
      r.Set(p, q);
      queue.push_back({p, q});
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [q, q2] = queue[head];
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
      for (StateId p : in[q][l]) {
        for (StateId p2 : in[q2][l]) {
          if (!r.Contains(p, p2)) {
            r.Set(p, p2);
            queue.push_back({p, p2});
          }
        }
      }
    }
  }
  return r;
}

Relation CompleteRelation(const Wfa &a) {
  Relation r(a.num_states());
  for (StateId p = 0; p < a.num_states(); ++p) {
    for (StateId q = 0; q < a.num_states(); ++q) r.Set(p, q);
  }
  return r;
}

AdmissibilityReport ValidateAdmissible(const Wfa &a, const Relation &r) {
  if (r.size() != a.num_states()) {
    throw UsageError("relation size does not match the automaton");
  }
  AdmissibilityReport report;
  Relation rstar = CommonFutureRelation(a);
  for (const auto &[p, q] : rstar.Pairs()) {
    if (!r.Contains(p, q)) report.missing.push_back({p, q});
  }
  std::set<StatePair> bad;
  for (const auto &e1 : a.transitions()) {
    for (const auto &e2 : a.transitions()) {
      if (e1.label != e2.label) continue;
      if (r.Contains(e1.dst, e2.dst) && !r.Contains(e1.src, e2.src)) {
        bad.insert({e1.src, e2.src});
      }
    }
  }
  report.incompatible.assign(bad.begin(), bad.end());
  report.ok = report.missing.empty() && report.incompatible.empty();
  return report;
}

Relation ParseRelation(StateId num_states, std::string_view text) {
  Relation r(num_states);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "rel") {
      throw ParseError(line_no, "expected 'rel p q', got '" + keyword + "'");
    }
    long long p, q;
    std::string extra;
    if (!(fields >> p >> q) || (fields >> extra)) {
      throw ParseError(line_no, "expected 'rel p q'");
    }
    if (p < 0 || q < 0 || p >= num_states || q >= num_states) {
      throw ParseError(line_no, "state out of range");
    }
    r.SetSymmetric(static_cast<StateId>(p), static_cast<StateId>(q));
  }
  return r;
}

}  // namespace wfadis
