// Command-line front end. Talks to the library only through wfadis.h.
//
// Exit codes: 0 success, 1 property-negative answer, 2 usage or parse error,
// 3 limit exhaustion, 4 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wfadis/wfadis.h"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;

struct WfaDeleter {
  void operator()(wfadis_wfa *a) const { wfadis_wfa_free(a); }
};
struct RelationDeleter {
  void operator()(wfadis_relation *r) const { wfadis_relation_free(r); }
};
struct StringDeleter {
  void operator()(char *s) const { wfadis_string_free(s); }
};
using WfaPtr = std::unique_ptr<wfadis_wfa, WfaDeleter>;
using RelationPtr = std::unique_ptr<wfadis_relation, RelationDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
};

int ExitCodeFor(wfadis_status status) {
  switch (status) {
    case WFADIS_OK:
      return 0;
    case WFADIS_ERR_LIMIT:
      return kExitLimit;
    case WFADIS_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

void Check(wfadis_status status, const std::string &context = "") {
  if (status == WFADIS_OK) return;
  std::cerr << "wfadis: ";
  if (!context.empty()) std::cerr << context << ": ";
  std::cerr << wfadis_last_error() << "\n";
  throw Exit{ExitCodeFor(status)};
}

[[noreturn]] void UsageFailure(const std::string &message) {
  std::cerr << "wfadis: " << message << "\n";
  throw Exit{kExitUsage};
}

std::string ReadAll(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) UsageFailure("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteAll(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) UsageFailure("cannot write '" + path + "'");
  out << text;
}

WfaPtr Load(const std::string &path) {
  std::string text = ReadAll(path);
  wfadis_wfa *a = nullptr;
  Check(wfadis_wfa_parse(text.c_str(), &a), path == "-" ? "<stdin>" : path);
  return WfaPtr(a);
}

WfaPtr Trimmed(const wfadis_wfa *a) {
  wfadis_wfa *t = nullptr;
  Check(wfadis_trim(a, &t));
  return WfaPtr(t);
}

bool IsTrim(const wfadis_wfa *a) {
  int trim = 0;
  Check(wfadis_is_trim(a, &trim));
  return trim != 0;
}

void Emit(const wfadis_wfa *a, const std::string &out) {
  char *text = nullptr;
  Check(wfadis_wfa_serialize(a, &text));
  StringPtr owned(text);
  WriteAll(out, text);
}

// File relations refer to input ids, so
// they require an input that is already trim.
RelationPtr MakeRelation(const wfadis_wfa *input, const wfadis_wfa *trimmed,
                         const std::string &spec) {
  wfadis_relation *r = nullptr;
  if (spec == "rstar") {
    Check(wfadis_relation_make(trimmed, WFADIS_RELATION_COMMON_FUTURE, &r));
  } else if (spec == "complete") {
    Check(wfadis_relation_make(trimmed, WFADIS_RELATION_COMPLETE, &r));
  } else if (spec.rfind("file:", 0) == 0) {
    if (!IsTrim(input)) {
      UsageFailure("a relation file requires a trim input automaton");
    }
    std::string path = spec.substr(5);
    std::string text = ReadAll(path);
    Check(wfadis_relation_parse(trimmed, text.c_str(), &r), path);
  } else {
    UsageFailure("unknown relation '" + spec +
                 "' (expected rstar, complete or file:<path>)");
  }
  return RelationPtr(r);
}

wfadis_strategy ParseStrategy(const std::string &s) {
  return s == "pairs" ? WFADIS_STRATEGY_PAIRS : WFADIS_STRATEGY_LISTS;
}

std::string YesNo(int v) { return v != 0 ? "yes" : "no"; }

struct Options {
  std::string input = "-";
  std::string second;
  std::string out;
  std::string relation = "rstar";
  std::string strategy = "lists";
  bool relaxed = false;
  std::size_t state_limit = 100000;
  int max_len = 8;
  std::string dump;
  std::string mode = "weak";
  // random
  unsigned long long seed = 0;
  int states = 5;
  int labels = 2;
  double density = 0.3;
  bool acyclic = false;
  bool deterministic = false;
  long long min_weight = 0;
  long long max_weight = 5;
  int initial = 1;
  int final_count = 1;
  std::string semiring = "tropical";
  bool lattice = false;
  int exp_gap = 0;
  int count = 1;
  std::string out_dir;
  // stats
  std::string op = "disambiguate";
};

void RunPredis(const Options &o) {
  WfaPtr input = Load(o.input);
  WfaPtr a = Trimmed(input.get());
  RelationPtr r = MakeRelation(input.get(), a.get(), o.relation);
  wfadis_wfa *out = nullptr;
  char *dump = nullptr;
  Check(wfadis_predisambiguate(a.get(), r.get(), o.state_limit, &out,
                               o.dump.empty() ? nullptr : &dump));
  WfaPtr result(out);
  StringPtr owned_dump(dump);
  if (dump != nullptr) WriteAll(o.dump, dump);
  Emit(result.get(), o.out);
}

void RunDisambiguate(const Options &o) {
  WfaPtr input = Load(o.input);
  WfaPtr a = Trimmed(input.get());
  RelationPtr r = MakeRelation(input.get(), a.get(), o.relation);
  wfadis_disambiguate_options options;
  wfadis_disambiguate_options_init(&options);
  options.strategy = ParseStrategy(o.strategy);
  options.relaxed = o.relaxed ? 1 : 0;
  options.state_limit = o.state_limit;
  wfadis_wfa *out = nullptr;
  Check(wfadis_disambiguate(a.get(), r.get(), &options, &out));
  WfaPtr result(out);
  Emit(result.get(), o.out);
}

void RunDeterminize(const Options &o) {
  WfaPtr input = Load(o.input);
  WfaPtr a = Trimmed(input.get());
  wfadis_wfa *out = nullptr;
  Check(wfadis_determinize(a.get(), o.state_limit, &out));
  WfaPtr result(out);
  Emit(result.get(), o.out);
}

void RunTwinsCheck(const Options &o) {
  WfaPtr input = Load(o.input);
  WfaPtr a = Trimmed(input.get());
  wfadis_twins_mode mode =
      o.mode == "classic" ? WFADIS_TWINS_CLASSIC : WFADIS_TWINS_WEAK;
  int holds = 0;
  char *witness = nullptr;
  Check(wfadis_twins_check(a.get(), mode, &holds, &witness));
  StringPtr owned(witness);
  std::string name = o.mode == "classic" ? "twins" : "weak twins";
  if (holds != 0) {
    std::cout << name << ": holds\n";
    return;
  }
  std::cout << name << ": fails\n";
  if (witness != nullptr) std::cout << "witness: " << witness << "\n";
  throw Exit{kExitNegative};
}

void RunEquiv(const Options &o) {
  WfaPtr a = Load(o.input);
  WfaPtr b = Load(o.second);
  int equivalent = 0;
  char *difference = nullptr;
  Check(wfadis_equivalent_up_to(a.get(), b.get(), o.max_len, &equivalent,
                                &difference));
  StringPtr owned(difference);
  if (equivalent != 0) {
    std::cout << "equivalent\n";
    return;
  }
  std::cout << "not equivalent\n";
  if (difference != nullptr) std::cout << "difference: " << difference << "\n";
  throw Exit{kExitNegative};
}

void RunAmbiguityCheck(const Options &o) {
  WfaPtr input = Load(o.input);
  int unambiguous = 0, cycle_unambiguous = 0;
  Check(wfadis_is_unambiguous(input.get(), &unambiguous));
  Check(wfadis_is_cycle_unambiguous(input.get(), &cycle_unambiguous));
  std::cout << (unambiguous != 0 ? "unambiguous" : "ambiguous") << "\n";
  std::cout << "cycle-unambiguous: " << YesNo(cycle_unambiguous) << "\n";
  if (unambiguous == 0) throw Exit{kExitNegative};
}

void RunInfo(const Options &o) {
  WfaPtr input = Load(o.input);
  wfadis_wfa_info info;
  Check(wfadis_wfa_get_info(input.get(), &info));
  int trim = 0, unambiguous = 0, cycle_unambiguous = 0, deterministic = 0;
  Check(wfadis_is_trim(input.get(), &trim));
  Check(wfadis_is_unambiguous(input.get(), &unambiguous));
  Check(wfadis_is_cycle_unambiguous(input.get(), &cycle_unambiguous));
  Check(wfadis_is_deterministic(input.get(), &deterministic));
  std::cout << "semiring: "
            << (info.semiring == WFADIS_TROPICAL ? "tropical" : "probability")
            << "\n"
            << "states: " << info.num_states << "\n"
            << "transitions: " << info.num_transitions << "\n"
            << "size: " << info.num_states + info.num_transitions << "\n"
            << "initial: " << info.num_initial << "\n"
            << "final: " << info.num_final << "\n"
            << "alphabet: " << info.alphabet_size << "\n"
            << "trim: " << YesNo(trim) << "\n"
            << "unambiguous: " << YesNo(unambiguous) << "\n"
            << "cycle-unambiguous: " << YesNo(cycle_unambiguous) << "\n"
            << "deterministic: " << YesNo(deterministic) << "\n";
}

WfaPtr GenerateOne(const Options &o, unsigned long long seed) {
  wfadis_wfa *a = nullptr;
  if (o.exp_gap > 0) {
    Check(wfadis_exponential_gap(o.exp_gap, &a));
  } else if (o.lattice) {
    Check(wfadis_random_lattice(seed, &a));
  } else {
    wfadis_random_config c;
    wfadis_random_config_init(&c);
    c.num_states = o.states;
    c.alphabet_size = o.labels;
    c.transition_density = o.density;
    c.acyclic = o.acyclic ? 1 : 0;
    c.deterministic = o.deterministic ? 1 : 0;
    c.min_weight = o.min_weight;
    c.max_weight = o.max_weight;
    c.num_initial = o.initial;
    c.num_final = o.final_count;
    c.semiring =
        o.semiring == "probability" ? WFADIS_PROBABILITY : WFADIS_TROPICAL;
    c.seed = seed;
    Check(wfadis_random(&c, &a));
  }
  return WfaPtr(a);
}

void RunRandom(const Options &o) {
  if (o.out_dir.empty()) {
    if (o.count != 1) UsageFailure("--count requires --out-dir");
    WfaPtr a = GenerateOne(o, o.seed);
    Emit(a.get(), o.out);
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) UsageFailure("cannot create '" + o.out_dir + "': " + ec.message());
  for (int i = 0; i < o.count; ++i) {
    unsigned long long seed = o.seed + static_cast<unsigned long long>(i);
    WfaPtr a = GenerateOne(o, seed);
    char name[64];
    std::snprintf(name, sizeof name, "%s-%06llu.wfa",
                  o.exp_gap > 0 ? "gap" : (o.lattice ? "lattice" : "random"), seed);
    Emit(a.get(), (std::filesystem::path(o.out_dir) / name).string());
  }
}

void RunStats(const Options &o) {
  wfadis_stats_options options;
  wfadis_stats_options_init(&options);
  options.op = o.op == "determinize" ? WFADIS_STATS_DETERMINIZE
                                     : WFADIS_STATS_DISAMBIGUATE;
  options.state_limit = o.state_limit;
  if (o.relation == "complete") {
    options.relation = WFADIS_RELATION_COMPLETE;
  } else if (o.relation != "rstar") {
    UsageFailure("stats supports --relation rstar|complete");
  }
  options.strategy = ParseStrategy(o.strategy);
  char *report = nullptr;
  Check(wfadis_stats_run(o.input.c_str(), &options, &report));
  StringPtr owned(report);
  WriteAll(o.out, report);
}

void AddInput(CLI::App *cmd, Options &o) {
  cmd->add_option("input", o.input, "Automaton file ('-' for stdin)")
      ->capture_default_str();
}

void AddOut(CLI::App *cmd, Options &o) {
  cmd->add_option("--out", o.out, "Output file (default stdout)");
}

void AddLimit(CLI::App *cmd, Options &o) {
  cmd->add_option("--state-limit", o.state_limit, "Maximum number of states")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void AddRelation(CLI::App *cmd, Options &o) {
  cmd->add_option("--relation", o.relation, "rstar, complete or file:<path>")
      ->capture_default_str();
}

void AddStrategy(CLI::App *cmd, Options &o) {
  cmd->add_option("--strategy", o.strategy, "Transition removal strategy")
      ->capture_default_str()
      ->check(CLI::IsMember({"lists", "pairs"}));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Weighted automaton disambiguation toolkit"};
  app.require_subcommand(1);
  Options o;

  auto *predis = app.add_subcommand("predis", "R-pre-disambiguate");
  AddInput(predis, o);
  AddRelation(predis, o);
  AddLimit(predis, o);
  AddOut(predis, o);
  predis->add_option("--dump", o.dump, "Write the state provenance dump here");

  auto *disamb = app.add_subcommand("disambiguate", "Disambiguate");
  AddInput(disamb, o);
  AddRelation(disamb, o);
  AddStrategy(disamb, o);
  disamb->add_flag("--relaxed", o.relaxed, "Relaxed list removal rule");
  AddLimit(disamb, o);
  AddOut(disamb, o);

  auto *det = app.add_subcommand("determinize", "Weighted determinization");
  AddInput(det, o);
  AddLimit(det, o);
  AddOut(det, o);

  auto *twins = app.add_subcommand("twins-check", "Twins property test");
  AddInput(twins, o);
  twins->add_option("--mode", o.mode, "weak or classic")
      ->capture_default_str()
      ->check(CLI::IsMember({"weak", "classic"}));

  auto *equiv = app.add_subcommand("equiv", "Bounded equivalence check");
  equiv->add_option("first", o.input, "First automaton")->required();
  equiv->add_option("second", o.second, "Second automaton")->required();
  equiv->add_option("--max-len", o.max_len, "Longest string compared")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto *ambig = app.add_subcommand("ambiguity-check", "Unambiguity test");
  AddInput(ambig, o);

  auto *random = app.add_subcommand("random", "Generate automata");
  random->add_option("--seed", o.seed, "Seed")->capture_default_str();
  random->add_option("--states", o.states)->capture_default_str();
  random->add_option("--labels", o.labels)->capture_default_str();
  random->add_option("--density", o.density)->capture_default_str();
  random->add_flag("--acyclic", o.acyclic);
  random->add_flag("--deterministic", o.deterministic);
  random->add_option("--min-weight", o.min_weight)->capture_default_str();
  random->add_option("--max-weight", o.max_weight)->capture_default_str();
  random->add_option("--initial", o.initial)->capture_default_str();
  random->add_option("--final", o.final_count)->capture_default_str();
  random->add_option("--semiring", o.semiring)
      ->capture_default_str()
      ->check(CLI::IsMember({"tropical", "probability"}));
  random->add_flag("--lattice", o.lattice, "Lattice corpus configuration");
  random->add_option("--exp-gap", o.exp_gap, "Exponential-gap family member n")
      ->check(CLI::PositiveNumber);
  random->add_option("--count", o.count, "Number of automata")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  random->add_option("--out-dir", o.out_dir, "Write one file per automaton");
  AddOut(random, o);

  auto *stats = app.add_subcommand("stats", "Expansion statistics on a corpus");
  stats->add_option("dir", o.input, "Corpus directory")->required();
  stats->add_option("--op", o.op)
      ->capture_default_str()
      ->check(CLI::IsMember({"disambiguate", "determinize"}));
  AddRelation(stats, o);
  AddStrategy(stats, o);
  AddLimit(stats, o);
  AddOut(stats, o);

  auto *info = app.add_subcommand("info", "Summary of an automaton");
  AddInput(info, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (predis->parsed()) RunPredis(o);
    if (disamb->parsed()) RunDisambiguate(o);
    if (det->parsed()) RunDeterminize(o);
    if (twins->parsed()) RunTwinsCheck(o);
    if (equiv->parsed()) RunEquiv(o);
    if (ambig->parsed()) RunAmbiguityCheck(o);
    if (random->parsed()) RunRandom(o);
    if (stats->parsed()) RunStats(o);
    if (info->parsed()) RunInfo(o);
  } catch (const Exit &e) {
    std::cout.flush();
    return e.code;
  }
  return 0;
}
