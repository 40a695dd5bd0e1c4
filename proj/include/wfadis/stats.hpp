#ifndef WFADIS_STATS_HPP_
#define WFADIS_STATS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "wfadis/disambiguation.hpp"
#include "wfadis/semiring.hpp"

namespace wfadis {

enum class StatsOperation { kDisambiguate, kDeterminize };
enum class RelationChoice { kCommonFuture, kComplete };

struct StatsOptions {
  StatsOperation operation = StatsOperation::kDisambiguate;
  std::size_t state_limit = 100000;
  RelationChoice relation = RelationChoice::kCommonFuture;
  RemovalStrategy strategy = RemovalStrategy::kLists;
};

struct StatsRow {
  enum class Status { kOk, kLimit, kError };
  std::string file;
  Status status = Status::kOk;
  std::size_t in_states = 0, in_transitions = 0;
  std::size_t out_states = 0, out_transitions = 0;
  // size(out) / size(in) with size = |Q| + |E|; meaningful for kOk rows.
  Rational expansion = 0;
  std::string message;
};

struct StatsReport {
  StatsOptions options;
  // Sorted by file name.
  std::vector<StatsRow> rows;
  std::size_t ok = 0, limit_failures = 0, errors = 0;
  // Over kOk rows; population standard deviation.
  double mean_expansion = 0, stddev_expansion = 0;

  std::string ToText() const;
};

// Runs the operation on every "*.wfa" file of dir (inputs are trimmed
// first). Limit exhaustion and unreadable files are recorded as rows; the run
// continues. Throws UsageError if dir cannot be listed.
StatsReport RunStats(const std::string &dir, const StatsOptions &options);

}  // namespace wfadis

#endif  // WFADIS_STATS_HPP_
