#ifndef WFADIS_ORACLE_HPP_
#define WFADIS_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "wfadis/semiring.hpp"
#include "wfadis/wfa.hpp"

namespace wfadis::oracle {

// Ground truth by exhaustive path enumeration. Nothing here calls the path
// queries of automata.hpp, so the two can check each other.

// Shortlex order: shorter strings first, then lexicographic.
struct ShortLex {
  bool operator()(const LabelString &x, const LabelString &y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

struct LanguageEntry {
  Weight weight;
  std::size_t accepting_paths = 0;
};

// Every accepted string of length <= max_len with its weight and number of
// accepting paths. Strings absent from the table have weight zero.
using LanguageTable = std::map<LabelString, LanguageEntry, ShortLex>;

// W_I(x, p) for every x of length <= max_len and every p reached by x.
using PrefixTable =
    std::map<LabelString, std::map<StateId, Weight>, ShortLex>;

// A path from an initial state, as reported by EnumeratePaths.
struct PathView {
  const LabelString &labels;
  StateId origin;
  StateId end;
  // lambda(origin) * weights along the path.
  const Weight &initial_weight;
};

// Depth-first enumeration of every path from an initial state with at most
// max_len transitions, zero-length paths included.
void EnumeratePaths(const Wfa &a, int max_len,
                    const std::function<void(const PathView &)> &visit);

LanguageTable BuildLanguageTable(const Wfa &a, int max_len);
PrefixTable BuildPrefixTable(const Wfa &a, int max_len);

struct Equivalence {
  bool equivalent = true;
  // Shortlex-first string on which the weights differ.
  std::optional<LabelString> first_difference;
  std::optional<std::pair<Weight, Weight>> weights;
};

// Compares the weights (not path counts) of all strings up to max_len.
// Throws UsageError on kind or alphabet mismatch.
Equivalence EquivalentUpTo(const Wfa &a, const Wfa &b, int max_len);

struct RandomWfaConfig {
  int num_states = 5;
  int alphabet_size = 2;
  // Probability of each candidate (src, label, dst) transition.
  double transition_density = 0.3;
  // Only src < dst transitions.
  bool acyclic = false;
  // At most one transition per (src, label).
  bool deterministic = false;
  std::int64_t min_weight = 0;
  std::int64_t max_weight = 5;
  int num_initial = 1;
  int num_final = 1;
  SemiringKind kind = SemiringKind::kTropical;
  std::uint64_t seed = 0;
};

// A trim, nonempty random automaton; a deterministic function of config.
// Draws are retried (continuing the same generator) until the trimmed result
// is nonempty. Labels are "a", "b", ... Throws UsageError for an impossible
// config.
Wfa RandomWfa(const RandomWfaConfig &config);

// The configuration family of the synthetic lattice corpus: acyclic,
// 4-12 states, 2-4 labels, tropical weights 0-9, drawn from seed.
RandomWfaConfig LatticeConfig(std::uint64_t seed);

// Uniform integer in [lo, hi] from a 64-bit Mersenne twister; reproducible
// across standard libraries.
std::int64_t UniformInt(std::uint64_t draw, std::int64_t lo, std::int64_t hi);

}  // namespace wfadis::oracle

#endif  // WFADIS_ORACLE_HPP_
