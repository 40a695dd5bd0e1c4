#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "reference.hpp"
#include "wfadis/automata.hpp"
#include "wfadis/disambiguation.hpp"
#include "wfadis/errors.hpp"
#include "wfadis/oracle.hpp"
#include "wfadis/relation.hpp"
#include "wfadis/text_format.hpp"

using namespace wfadis;
using namespace wfadis::oracle;

namespace {

Weight T(std::int64_t v) { return Weight::Of(SemiringKind::kTropical, v); }

std::string ReadText(const std::string &path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("language table of A0") {
  LanguageTable t = BuildLanguageTable(fixtures::A0(), 2);
  REQUIRE(t.size() == 1);
  CHECK(t.begin()->first == LabelString{0, 1});
  CHECK(t.begin()->second.weight == T(4));
  CHECK(t.begin()->second.accepting_paths == 2);
}

TEST_CASE("language table edge cases") {
  CHECK(BuildLanguageTable(Wfa(SemiringKind::kTropical, {}), 3).empty());
  LanguageTable loop = BuildLanguageTable(fixtures::SelfLoop(), 2);
  REQUIRE(loop.size() == 3);
  CHECK(loop.at({}).weight == T(0));
  CHECK(loop.at({0}).weight == T(1));
  CHECK(loop.at({0, 0}).weight == T(2));
  for (const auto &[x, e] : loop) CHECK(e.accepting_paths == 1);
}

TEST_CASE("tables agree with the test reference") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomWfaConfig c;
    c.seed = seed;
    c.num_states = 5;
    c.num_initial = 2;
    c.kind = seed % 2 ? SemiringKind::kProbability : SemiringKind::kTropical;
    c.min_weight = 1;
    Wfa a = RandomWfa(c);
    LanguageTable t = BuildLanguageTable(a, 5);
    auto r = ref::Language(a, 5);
    REQUIRE(t.size() == r.size());
    for (const auto &[x, e] : r) {
      CHECK(t.at(x).weight == e.weight);
      CHECK(t.at(x).accepting_paths == e.paths);
    }
    PrefixTable p = BuildPrefixTable(a, 4);
    auto rp = ref::PrefixWeights(a, 4);
    CHECK(p.size() == rp.size());
    for (const auto &[x, row] : rp) CHECK(p.at(x) == row);
  }
}

TEST_CASE("bounded equivalence") {
  Wfa a = fixtures::A0();
  CHECK(EquivalentUpTo(a, a, 5).equivalent);
  CHECK(EquivalentUpTo(a, Disambiguate(a, CommonFutureRelation(a)), 6).equivalent);
  Wfa changed = ParseWfa(
      "wfa v1 tropical\ninitial 0 0\nfinal 3 0\n"
      "trans 0 1 a 1\ntrans 0 2 a 2\ntrans 1 3 b 3\ntrans 2 3 b 1\n");
  Equivalence eq = EquivalentUpTo(a, changed, 5);
  CHECK_FALSE(eq.equivalent);
  REQUIRE(eq.first_difference.has_value());
  CHECK(a.Decode(*eq.first_difference) == "a b");
  CHECK(eq.weights->first == T(4));
  CHECK(eq.weights->second == T(3));
  CHECK_THROWS_AS(
      EquivalentUpTo(a, ParseWfa("wfa v1 probability\ninitial 0 1\n"), 2),
      UsageError);
}

TEST_CASE("random generation is deterministic and respects the config") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomWfaConfig c;
    c.seed = seed;
    c.num_states = 7;
    c.acyclic = seed % 2 == 0;
    c.deterministic = seed % 3 == 0;
    c.min_weight = 2;
    c.max_weight = 4;
    Wfa a = RandomWfa(c);
    CHECK(SerializeWfa(a) == SerializeWfa(RandomWfa(c)));
    CHECK(IsTrim(a));
    CHECK(a.num_states() <= 7);
    if (c.acyclic) {
      CHECK_FALSE(ref::HasCycle(a));
      CHECK(IsCycleUnambiguous(a));
    }
    if (c.deterministic) CHECK(IsDeterministic(a));
    for (const auto &t : a.transitions()) {
      CHECK(t.weight.value() >= 2);
      CHECK(t.weight.value() <= 4);
    }
  }
  RandomWfaConfig bad;
  bad.num_states = 0;
  CHECK_THROWS_AS(RandomWfa(bad), UsageError);
}

TEST_CASE("pinned golden automaton") {
  RandomWfaConfig c;
  c.num_states = 5;
  c.transition_density = 0.3;
  c.seed = 42;
  CHECK(SerializeWfa(RandomWfa(c)) ==
        ReadText(fixtures::DataPath("random_n5_d03_s42.wfa")));
}

TEST_CASE("lattice configs stay in range") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomWfaConfig c = LatticeConfig(seed);
    CHECK(c.acyclic);
    CHECK(c.num_states >= 4);
    CHECK(c.num_states <= 12);
    CHECK(c.alphabet_size >= 2);
    CHECK(c.alphabet_size <= 4);
    CHECK(c.min_weight == 0);
    CHECK(c.max_weight == 9);
  }
}
