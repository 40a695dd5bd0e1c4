#include "wfadis/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "wfadis/automata.hpp"
#include "wfadis/determinization.hpp"
#include "wfadis/errors.hpp"
#include "wfadis/relation.hpp"
#include "wfadis/text_format.hpp"

namespace wfadis {
namespace {

const char *StatusName(StatsRow::Status s) {
  switch (s) {
    case StatsRow::Status::kOk: return "ok";
    case StatsRow::Status::kLimit: return "limit";
    case StatsRow::Status::kError: return "error";
  }
  return "?";
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

StatsRow RunOne(const std::filesystem::path &path, const StatsOptions &options) {
  StatsRow row;
  row.file = path.filename().string();
  try {
    Wfa input = Trim(ReadWfaFile(path.string()));
    row.in_states = input.num_states();
    row.in_transitions = input.transitions().size();
    Wfa output = [&] {
      if (options.operation == StatsOperation::kDeterminize) {
        return Trim(Determinize(input, options.state_limit));
      }
      Relation r = options.relation == RelationChoice::kComplete
                       ? CompleteRelation(input)
                       : CommonFutureRelation(input);
      DisambiguateOptions d;
      d.strategy = options.strategy;
      d.predis.state_limit = options.state_limit;
      return Disambiguate(input, r, d);
    }();
    row.out_states = output.num_states();
    row.out_transitions = output.transitions().size();
    std::size_t in_size = row.in_states + row.in_transitions;
    if (in_size == 0) {
      row.status = StatsRow::Status::kError;
      row.message = "empty input";
      return row;
    }
    row.expansion = Rational(row.out_states + row.out_transitions, in_size);
  } catch (const LimitExceeded &e) {
    row.status = StatsRow::Status::kLimit;
    row.message = e.what();
  } catch (const Error &e) {
    row.status = StatsRow::Status::kError;
    row.message = e.what();
  }
  return row;
}

}  // namespace

StatsReport RunStats(const std::string &dir, const StatsOptions &options) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto &entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".wfa") files.push_back(entry.path());
  }
  if (ec) throw UsageError("cannot list '" + dir + "': " + ec.message());
  std::sort(files.begin(), files.end());

  StatsReport report;
  report.options = options;
  std::vector<double> expansions;
  for (const auto &f : files) {
    StatsRow row = RunOne(f, options);
    switch (row.status) {
      case StatsRow::Status::kOk:
        ++report.ok;
        expansions.push_back(row.expansion.convert_to<double>());
        break;
      case StatsRow::Status::kLimit: ++report.limit_failures; break;
      case StatsRow::Status::kError: ++report.errors; break;
    }
    report.rows.push_back(std::move(row));
  }
  if (!expansions.empty()) {
    double sum = 0;
    for (double e : expansions) sum += e;
    report.mean_expansion = sum / expansions.size();
    double sq = 0;
    for (double e : expansions) {
      sq += (e - report.mean_expansion) * (e - report.mean_expansion);
    }
    report.stddev_expansion = std::sqrt(sq / expansions.size());
  }
  return report;
}

std::string StatsReport::ToText() const {
  std::string out = "# operation ";
  out += options.operation == StatsOperation::kDeterminize ? "determinize"
                                                            : "disambiguate";
  out += " state_limit " + std::to_string(options.state_limit) + "\n";
  out += "# file in_states in_transitions in_size out_states out_transitions "
         "out_size expansion status\n";
  for (const auto &r : rows) {
    out += r.file + ' ' + std::to_string(r.in_states) + ' ' +
           std::to_string(r.in_transitions) + ' ' +
           std::to_string(r.in_states + r.in_transitions) + ' ';
    if (r.status == StatsRow::Status::kOk) {
      out += std::to_string(r.out_states) + ' ' +
             std::to_string(r.out_transitions) + ' ' +
             std::to_string(r.out_states + r.out_transitions) + ' ' +
             Fixed(r.expansion.convert_to<double>());
    } else {
      out += "- - - -";
    }
    out += ' ';
    out += StatusName(r.status);
    if (!r.message.empty()) out += " " + r.message;
    out += "\n";
  }
  out += "files " + std::to_string(rows.size()) + "\n";
  out += "ok " + std::to_string(ok) + "\n";
  out += "limit_failures " + std::to_string(limit_failures) + "\n";
  out += "errors " + std::to_string(errors) + "\n";
  out += "mean_expansion " + Fixed(mean_expansion) + "\n";
  out += "stddev_expansion " + Fixed(stddev_expansion) + "\n";
  return out;
}

}  // namespace wfadis
