#include "wfadis/wfadis.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wfadis/automata.hpp"
#include "wfadis/determinization.hpp"
#include "wfadis/disambiguation.hpp"
#include "wfadis/errors.hpp"
#include "wfadis/families.hpp"
#include "wfadis/oracle.hpp"
#include "wfadis/predisambiguation.hpp"
#include "wfadis/relation.hpp"
#include "wfadis/stats.hpp"
#include "wfadis/text_format.hpp"
#include "wfadis/twins.hpp"
#include "wfadis/wfa.hpp"

struct wfadis_wfa {
  wfadis::Wfa value;
};

struct wfadis_relation {
  wfadis::Relation value;
};

#define WFADIS_REQUIRE(cond)                                      \
  do {                                                            \
    if (!(cond)) return Fail(WFADIS_ERR_USAGE, "null argument: " #cond); \
  } while (0)

namespace {

thread_local std::string g_last_error;

wfadis_status Fail(wfadis_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
wfadis_status Guard(F &&body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const wfadis::ParseError &e) {
    return Fail(WFADIS_ERR_PARSE, e.what());
  } catch (const wfadis::LimitExceeded &e) {
    return Fail(WFADIS_ERR_LIMIT, e.what());
  } catch (const wfadis::UsageError &e) {
    return Fail(WFADIS_ERR_USAGE, e.what());
  } catch (const wfadis::UnsupportedOperation &e) {
    return Fail(WFADIS_ERR_UNSUPPORTED, e.what());
  } catch (const wfadis::DivisionByZero &e) {
    return Fail(WFADIS_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const std::exception &e) {
    return Fail(WFADIS_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(WFADIS_ERR_INTERNAL, "unknown exception");
  }
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

wfadis_wfa *Wrap(wfadis::Wfa a) { return new wfadis_wfa{std::move(a)}; }

wfadis::SemiringKind ToKind(wfadis_semiring s) {
  switch (s) {
    case WFADIS_TROPICAL:
      return wfadis::SemiringKind::kTropical;
    case WFADIS_PROBABILITY:
      return wfadis::SemiringKind::kProbability;
  }
  throw wfadis::UsageError("unknown semiring");
}

wfadis::RemovalStrategy ToStrategy(wfadis_strategy s) {
  switch (s) {
    case WFADIS_STRATEGY_LISTS:
      return wfadis::RemovalStrategy::kLists;
    case WFADIS_STRATEGY_PAIRS:
      return wfadis::RemovalStrategy::kPairs;
  }
  throw wfadis::UsageError("unknown removal strategy");
}

std::string Pair(const wfadis::StatePair &p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string DescribeWitness(const wfadis::Wfa &a,
                            const wfadis::CycleWitness &w) {
  std::string out = Pair(w.states.front());
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    out += " -" + a.alphabet()[w.labels[i]] + "-> " + Pair(w.states[i + 1]);
  }
  out += " weight " + w.weight.ToString();
  return out;
}

std::vector<std::string> SplitTokens(const char *text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

template <typename Pred>
wfadis_status BoolQuery(const wfadis_wfa *a, int *out, Pred pred) {
  WFADIS_REQUIRE(a != nullptr && out != nullptr);
  return Guard([&] {
    *out = pred(a->value) ? 1 : 0;
    return WFADIS_OK;
  });
}

}  // namespace

extern "C" {

const char *wfadis_last_error(void) { return g_last_error.c_str(); }

void wfadis_string_free(char *s) { std::free(s); }

wfadis_status wfadis_wfa_parse(const char *text, wfadis_wfa **out) {
  WFADIS_REQUIRE(text != nullptr && out != nullptr);
  return Guard([&] {
    *out = Wrap(wfadis::ParseWfa(text));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_wfa_read(const char *path, wfadis_wfa **out) {
  WFADIS_REQUIRE(path != nullptr && out != nullptr);
  return Guard([&] {
    *out = Wrap(wfadis::ReadWfaFile(path));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_wfa_write(const wfadis_wfa *a, const char *path) {
  WFADIS_REQUIRE(a != nullptr && path != nullptr);
  return Guard([&] {
    wfadis::WriteWfaFile(a->value, path);
    return WFADIS_OK;
  });
}

wfadis_status wfadis_wfa_serialize(const wfadis_wfa *a, char **out) {
  WFADIS_REQUIRE(a != nullptr && out != nullptr);
  return Guard([&] {
    *out = CopyString(wfadis::SerializeWfa(a->value));
    return WFADIS_OK;
  });
}

void wfadis_wfa_free(wfadis_wfa *a) { delete a; }

wfadis_status wfadis_wfa_get_info(const wfadis_wfa *a, wfadis_wfa_info *out) {
  WFADIS_REQUIRE(a != nullptr && out != nullptr);
  const wfadis::Wfa &w = a->value;
  out->semiring = w.kind() == wfadis::SemiringKind::kTropical
                      ? WFADIS_TROPICAL
                      : WFADIS_PROBABILITY;
  out->num_states = static_cast<std::size_t>(w.num_states());
  out->num_transitions = w.transitions().size();
  out->num_initial = w.initials().size();
  out->num_final = w.finals().size();
  out->alphabet_size = w.alphabet().size();
  return WFADIS_OK;
}

wfadis_status wfadis_trim(const wfadis_wfa *a, wfadis_wfa **out) {
  WFADIS_REQUIRE(a != nullptr && out != nullptr);
  return Guard([&] {
    *out = Wrap(wfadis::Trim(a->value));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_is_trim(const wfadis_wfa *a, int *out) {
  return BoolQuery(a, out, [](const wfadis::Wfa &w) { return wfadis::IsTrim(w); });
}

wfadis_status wfadis_is_unambiguous(const wfadis_wfa *a, int *out) {
  return BoolQuery(a, out,
                   [](const wfadis::Wfa &w) { return wfadis::IsUnambiguous(w); });
}

wfadis_status wfadis_is_cycle_unambiguous(const wfadis_wfa *a, int *out) {
  return BoolQuery(a, out, [](const wfadis::Wfa &w) {
    return wfadis::IsCycleUnambiguous(w);
  });
}

wfadis_status wfadis_is_deterministic(const wfadis_wfa *a, int *out) {
  return BoolQuery(
      a, out, [](const wfadis::Wfa &w) { return wfadis::IsDeterministic(w); });
}

wfadis_status wfadis_string_weight(const wfadis_wfa *a, const char *tokens,
                                   char **out) {
  WFADIS_REQUIRE(a != nullptr && tokens != nullptr && out != nullptr);
  return Guard([&] {
    std::vector<std::string> split = SplitTokens(tokens);
    wfadis::LabelString x = a->value.Encode(split);
    *out = CopyString(wfadis::StringWeight(a->value, x).ToString());
    return WFADIS_OK;
  });
}

wfadis_status wfadis_relation_make(const wfadis_wfa *a,
                                   wfadis_relation_kind kind,
                                   wfadis_relation **out) {
  WFADIS_REQUIRE(a != nullptr && out != nullptr);
  return Guard([&] {
    switch (kind) {
      case WFADIS_RELATION_COMMON_FUTURE:
        *out = new wfadis_relation{wfadis::CommonFutureRelation(a->value)};
        return WFADIS_OK;
      case WFADIS_RELATION_COMPLETE:
        if (!wfadis::IsTrim(a->value)) {
          throw wfadis::UsageError("relation requires a trim automaton");
        }
        *out = new wfadis_relation{wfadis::CompleteRelation(a->value)};
        return WFADIS_OK;
    }
    throw wfadis::UsageError("unknown relation kind");
  });
}

wfadis_status wfadis_relation_parse(const wfadis_wfa *a, const char *text,
                                    wfadis_relation **out) {
  WFADIS_REQUIRE(a != nullptr && text != nullptr && out != nullptr);
  return Guard([&] {
    wfadis::Relation r = wfadis::ParseRelation(a->value.num_states(), text);
    wfadis::AdmissibilityReport report = wfadis::ValidateAdmissible(a->value, r);
    if (!report.ok) {
      std::string msg = "relation is not admissible";
      if (!report.missing.empty()) {
        msg += "; missing common-future pairs:";
        for (const auto &p : report.missing) msg += " " + Pair(p);
      }
      if (!report.incompatible.empty()) {
        msg += "; unrelated predecessor pairs:";
        for (const auto &p : report.incompatible) msg += " " + Pair(p);
      }
      return Fail(WFADIS_ERR_USAGE, msg);
    }
    *out = new wfadis_relation{std::move(r)};
    return WFADIS_OK;
  });
}

void wfadis_relation_free(wfadis_relation *r) { delete r; }

wfadis_status wfadis_predisambiguate(const wfadis_wfa *a,
                                     const wfadis_relation *r,
                                     size_t state_limit, wfadis_wfa **out,
                                     char **dump) {
  WFADIS_REQUIRE(a != nullptr && r != nullptr && out != nullptr);
  return Guard([&] {
    wfadis::PredisOptions options;
    options.state_limit = state_limit;
    wfadis::PredisResult result =
        wfadis::Predisambiguate(a->value, r->value, options);
    char *text = dump != nullptr
                     ? CopyString(wfadis::DumpPredisStates(result))
                     : nullptr;
    *out = Wrap(std::move(result.automaton));
    if (dump != nullptr) *dump = text;
    return WFADIS_OK;
  });
}

void wfadis_disambiguate_options_init(wfadis_disambiguate_options *options) {
  if (options == nullptr) return;
  options->strategy = WFADIS_STRATEGY_LISTS;
  options->relaxed = 0;
  options->state_limit = 100000;
}

wfadis_status wfadis_disambiguate(const wfadis_wfa *a,
                                  const wfadis_relation *r,
                                  const wfadis_disambiguate_options *options,
                                  wfadis_wfa **out) {
  WFADIS_REQUIRE(a != nullptr && r != nullptr && out != nullptr);
  return Guard([&] {
    wfadis_disambiguate_options defaults;
    wfadis_disambiguate_options_init(&defaults);
    const wfadis_disambiguate_options &o =
        options != nullptr ? *options : defaults;
    wfadis::DisambiguateOptions opts;
    opts.strategy = ToStrategy(o.strategy);
    opts.removal.relaxed = o.relaxed != 0;
    opts.predis.state_limit = o.state_limit;
    *out = Wrap(wfadis::Disambiguate(a->value, r->value, opts));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_determinize(const wfadis_wfa *a, size_t state_limit,
                                 wfadis_wfa **out) {
  WFADIS_REQUIRE(a != nullptr && out != nullptr);
  return Guard([&] {
    *out = Wrap(wfadis::Determinize(a->value, state_limit));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_twins_check(const wfadis_wfa *a, wfadis_twins_mode mode,
                                 int *holds, char **witness) {
  WFADIS_REQUIRE(a != nullptr && holds != nullptr);
  return Guard([&] {
    wfadis::CycleCheckReport report;
    switch (mode) {
      case WFADIS_TWINS_WEAK:
        report = wfadis::HasWeakTwins(a->value);
        break;
      case WFADIS_TWINS_CLASSIC:
        report = wfadis::HasTwins(a->value);
        break;
      default:
        throw wfadis::UsageError("unknown twins mode");
    }
    char *text = nullptr;
    if (witness != nullptr && report.witness.has_value()) {
      text = CopyString(DescribeWitness(a->value, *report.witness));
    }
    *holds = report.holds ? 1 : 0;
    if (witness != nullptr) *witness = text;
    return WFADIS_OK;
  });
}

wfadis_status wfadis_equivalent_up_to(const wfadis_wfa *a,
                                      const wfadis_wfa *b, int max_len,
                                      int *equivalent, char **difference) {
  WFADIS_REQUIRE(a != nullptr && b != nullptr && equivalent != nullptr);
  if (max_len < 0) return Fail(WFADIS_ERR_USAGE, "max_len must be >= 0");
  return Guard([&] {
    wfadis::oracle::Equivalence eq =
        wfadis::oracle::EquivalentUpTo(a->value, b->value, max_len);
    char *text = nullptr;
    if (difference != nullptr && eq.first_difference.has_value()) {
      std::string x = a->value.Decode(*eq.first_difference);
      text = CopyString((x.empty() ? std::string("<eps>") : x) + ": " +
                        eq.weights->first.ToString() + " vs " +
                        eq.weights->second.ToString());
    }
    *equivalent = eq.equivalent ? 1 : 0;
    if (difference != nullptr) *difference = text;
    return WFADIS_OK;
  });
}

void wfadis_random_config_init(wfadis_random_config *config) {
  if (config == nullptr) return;
  wfadis::oracle::RandomWfaConfig d;
  config->num_states = d.num_states;
  config->alphabet_size = d.alphabet_size;
  config->transition_density = d.transition_density;
  config->acyclic = d.acyclic ? 1 : 0;
  config->deterministic = d.deterministic ? 1 : 0;
  config->min_weight = d.min_weight;
  config->max_weight = d.max_weight;
  config->num_initial = d.num_initial;
  config->num_final = d.num_final;
  config->semiring = WFADIS_TROPICAL;
  config->seed = d.seed;
}

wfadis_status wfadis_random(const wfadis_random_config *config,
                            wfadis_wfa **out) {
  WFADIS_REQUIRE(config != nullptr && out != nullptr);
  return Guard([&] {
    wfadis::oracle::RandomWfaConfig c;
    c.num_states = config->num_states;
    c.alphabet_size = config->alphabet_size;
    c.transition_density = config->transition_density;
    c.acyclic = config->acyclic != 0;
    c.deterministic = config->deterministic != 0;
    c.min_weight = config->min_weight;
    c.max_weight = config->max_weight;
    c.num_initial = config->num_initial;
    c.num_final = config->num_final;
    c.kind = ToKind(config->semiring);
    c.seed = config->seed;
    *out = Wrap(wfadis::oracle::RandomWfa(c));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_random_lattice(unsigned long long seed,
                                    wfadis_wfa **out) {
  WFADIS_REQUIRE(out != nullptr);
  return Guard([&] {
    *out = Wrap(wfadis::oracle::RandomWfa(wfadis::oracle::LatticeConfig(seed)));
    return WFADIS_OK;
  });
}

wfadis_status wfadis_exponential_gap(int n, wfadis_wfa **out) {
  WFADIS_REQUIRE(out != nullptr);
  return Guard([&] {
    *out = Wrap(wfadis::families::ExponentialGap(n));
    return WFADIS_OK;
  });
}

void wfadis_stats_options_init(wfadis_stats_options *options) {
  if (options == nullptr) return;
  options->op = WFADIS_STATS_DISAMBIGUATE;
  options->state_limit = 100000;
  options->relation = WFADIS_RELATION_COMMON_FUTURE;
  options->strategy = WFADIS_STRATEGY_LISTS;
}

wfadis_status wfadis_stats_run(const char *dir,
                               const wfadis_stats_options *options,
                               char **report) {
  WFADIS_REQUIRE(dir != nullptr && report != nullptr);
  return Guard([&] {
    wfadis_stats_options defaults;
    wfadis_stats_options_init(&defaults);
    const wfadis_stats_options &o = options != nullptr ? *options : defaults;
    wfadis::StatsOptions opts;
    opts.operation = o.op == WFADIS_STATS_DETERMINIZE
                         ? wfadis::StatsOperation::kDeterminize
                         : wfadis::StatsOperation::kDisambiguate;
    opts.state_limit = o.state_limit;
    opts.relation = o.relation == WFADIS_RELATION_COMPLETE
                        ? wfadis::RelationChoice::kComplete
                        : wfadis::RelationChoice::kCommonFuture;
    opts.strategy = ToStrategy(o.strategy);
    *report = CopyString(wfadis::RunStats(dir, opts).ToText());
    return WFADIS_OK;
  });
}

}  // extern "C"
