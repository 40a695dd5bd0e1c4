#include "wfadis/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "wfadis/automata.hpp"
#include "wfadis/errors.hpp"

namespace wfadis::oracle {
namespace {

void Walk(const Wfa &a, int max_len, StateId origin, StateId at,
          LabelString &labels, const Weight &weight,
          const std::function<void(const PathView &)> &visit) {
  visit(PathView{labels, origin, at, weight});
  if (static_cast<int>(labels.size()) == max_len) return;
  for (const auto &t : a.Out(at)) {
    labels.push_back(t.label);
    Walk(a, max_len, origin, t.dst, labels, Times(weight, t.weight), visit);
    labels.pop_back();
  }
}

double Unit(std::uint64_t draw) {
  return static_cast<double>(draw >> 11) * 0x1.0p-53;
}

}  // namespace

void EnumeratePaths(const Wfa &a, int max_len,
                    const std::function<void(const PathView &)> &visit) {
  LabelString labels;
  for (const auto &[q, lambda] : a.initials()) {
    Walk(a, max_len, q, q, labels, lambda, visit);
  }
}

LanguageTable BuildLanguageTable(const Wfa &a, int max_len) {
  LanguageTable table;
  EnumeratePaths(a, max_len, [&](const PathView &path) {
    auto f = a.finals().find(path.end);
    if (f == a.finals().end()) return;
    Weight w = Times(path.initial_weight, f->second);
    auto [it, inserted] =
        table.try_emplace(path.labels, LanguageEntry{w, 1});
    if (!inserted) {
      it->second.weight = Plus(it->second.weight, w);
      ++it->second.accepting_paths;
    }
  });
  return table;
}

PrefixTable BuildPrefixTable(const Wfa &a, int max_len) {
  PrefixTable table;
  EnumeratePaths(a, max_len, [&](const PathView &path) {
    auto &row = table[path.labels];
    auto [it, inserted] = row.try_emplace(path.end, path.initial_weight);
    if (!inserted) it->second = Plus(it->second, path.initial_weight);
  });
  return table;
}

Equivalence EquivalentUpTo(const Wfa &a, const Wfa &b, int max_len) {
  if (a.kind() != b.kind()) throw UsageError("equivalent_up_to: kind mismatch");
  if (a.alphabet() != b.alphabet()) {
    throw UsageError("equivalent_up_to: alphabet mismatch");
  }
  const LanguageTable ta = BuildLanguageTable(a, max_len);
  const LanguageTable tb = BuildLanguageTable(b, max_len);
  std::set<LabelString, ShortLex> strings;
  for (const auto &[x, e] : ta) strings.insert(x);
  for (const auto &[x, e] : tb) strings.insert(x);
  const Weight zero = Weight::Zero(a.kind());
  for (const auto &x : strings) {
    auto ia = ta.find(x);
    auto ib = tb.find(x);
    const Weight &wa = ia == ta.end() ? zero : ia->second.weight;
    const Weight &wb = ib == tb.end() ? zero : ib->second.weight;
    if (wa != wb) return {false, x, std::make_pair(wa, wb)};
  }
  return {};
}

std::int64_t UniformInt(std::uint64_t draw, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(draw % span);
}

Wfa RandomWfa(const RandomWfaConfig &config) {
  if (config.num_states < 1 || config.alphabet_size < 1 ||
      config.alphabet_size > 26 || config.transition_density <= 0 ||
      config.transition_density > 1 || config.num_initial < 1 ||
      config.num_final < 1 || config.num_initial > config.num_states ||
      config.num_final > config.num_states ||
      config.min_weight > config.max_weight) {
    throw UsageError("random_wfa: impossible configuration");
  }
  if (config.kind == SemiringKind::kProbability && config.min_weight <= 0) {
    throw UsageError("random_wfa: probability weights must be positive");
  }
  std::mt19937_64 rng(config.seed);
  auto weight = [&] {
    return Weight::Of(config.kind,
                      UniformInt(rng(), config.min_weight, config.max_weight));
  };
  auto pick = [&](int count, int bound) {
    std::vector<StateId> all(bound);
    for (int i = 0; i < bound; ++i) all[i] = i;
    for (int i = 0; i < count; ++i) {
      std::swap(all[i], all[UniformInt(rng(), i, bound - 1)]);
    }
    all.resize(count);
    return all;
  };
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    WfaBuilder b(config.kind);
    for (int l = 0; l < config.alphabet_size; ++l) {
      b.AddSymbol(std::string(1, static_cast<char>('a' + l)));
    }
    b.ReserveStates(config.num_states);
    for (StateId src = 0; src < config.num_states; ++src) {
      for (int l = 0; l < config.alphabet_size; ++l) {
        std::string token(1, static_cast<char>('a' + l));
        if (config.deterministic) {
          if (Unit(rng()) >= config.transition_density) continue;
          StateId lo = config.acyclic ? src + 1 : 0;
          if (lo >= config.num_states) continue;
          StateId dst = static_cast<StateId>(
              UniformInt(rng(), lo, config.num_states - 1));
          b.AddTransition(src, token, weight(), dst);
          continue;
        }
        for (StateId dst = config.acyclic ? src + 1 : 0;
             dst < config.num_states; ++dst) {
          if (Unit(rng()) < config.transition_density) {
            b.AddTransition(src, token, weight(), dst);
          }
        }
      }
    }
    // Acyclic machines start low and end high so that paths exist.
    std::vector<StateId> initial, final;
    if (config.acyclic) {
      int half = std::max(1, (config.num_states + 1) / 2);
      initial = pick(std::min(config.num_initial, half), half);
      final = pick(std::min(config.num_final, half), half);
      for (auto &q : final) q = config.num_states - 1 - q;
    } else {
      initial = pick(config.num_initial, config.num_states);
      final = pick(config.num_final, config.num_states);
    }
    if (config.deterministic) initial.resize(1);
    for (StateId q : initial) b.SetInitial(q, weight());
    for (StateId q : final) b.SetFinal(q, weight());
    Wfa trimmed = Trim(b.Build());
    if (trimmed.num_states() > 0) return trimmed;
  }
  throw UsageError("random_wfa: no nonempty automaton after many attempts");
}

RandomWfaConfig LatticeConfig(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eed1a77ULL);
  RandomWfaConfig c;
  c.num_states = static_cast<int>(UniformInt(rng(), 4, 12));
  c.alphabet_size = static_cast<int>(UniformInt(rng(), 2, 4));
  c.transition_density = 0.05 + 0.05 * static_cast<double>(UniformInt(rng(), 0, 4));
  c.acyclic = true;
  c.min_weight = 0;
  c.max_weight = 9;
  c.num_initial = static_cast<int>(UniformInt(rng(), 1, 2));
  c.num_final = static_cast<int>(UniformInt(rng(), 1, 3));
  c.kind = SemiringKind::kTropical;
  c.seed = seed;
  return c;
}

}  // namespace wfadis::oracle
