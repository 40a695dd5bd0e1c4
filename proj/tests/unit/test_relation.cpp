#include "doctest.h"
#include "fixtures.hpp"
#include "reference.hpp"
#include "wfadis/automata.hpp"
#include "wfadis/errors.hpp"
#include "wfadis/oracle.hpp"
#include "wfadis/relation.hpp"
#include "wfadis/text_format.hpp"

using namespace wfadis;

TEST_CASE("common future relation on A0") {
  Wfa a = fixtures::A0();
  Relation r = CommonFutureRelation(a);
  CHECK(r.Contains(1, 2));
  CHECK(r.Contains(2, 1));
  CHECK_FALSE(r.Contains(0, 3));
  CHECK_FALSE(r.Contains(0, 1));
  for (StateId q = 0; q < a.num_states(); ++q) CHECK(r.Contains(q, q));
  CHECK_THROWS_AS(CommonFutureRelation(ParseWfa(
                      "wfa v1 tropical\ninitial 0 0\nfinal 0 0\ntrans 0 1 a 1\n")),
                  UsageError);
}

TEST_CASE("common future relation matches the reference fixpoint") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    oracle::RandomWfaConfig c;
    c.seed = seed;
    c.num_states = 3 + static_cast<int>(seed % 5);
    c.num_final = 1 + static_cast<int>(seed % 3);
    c.transition_density = 0.2;
    Wfa a = oracle::RandomWfa(c);
    Relation r = CommonFutureRelation(a);
    auto expected = ref::CommonFuture(a);
    auto pairs = r.Pairs();
    CHECK(std::set<StatePair>(pairs.begin(), pairs.end()) == expected);
    CHECK(ValidateAdmissible(a, r).ok);
    CHECK(ValidateAdmissible(a, CompleteRelation(a)).ok);
    CHECK(CompleteRelation(a).Includes(r));
  }
}

TEST_CASE("complete relation") {
  CHECK(CompleteRelation(fixtures::A0()).Pairs().size() == 16);
  Wfa one = ParseWfa("wfa v1 tropical\ninitial 0 0\nfinal 0 0\n");
  CHECK(CompleteRelation(one).Pairs() == std::vector<StatePair>{{0, 0}});
}

TEST_CASE("identity relation is not admissible for A0") {
  Wfa a = fixtures::A0();
  Relation id(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) id.Set(q, q);
  AdmissibilityReport report = ValidateAdmissible(a, id);
  CHECK_FALSE(report.ok);
  bool missing_12 = false;
  for (const auto &p : report.missing) {
    if (p == StatePair{1, 2} || p == StatePair{2, 1}) missing_12 = true;
  }
  CHECK(missing_12);
}

TEST_CASE("an admissible relation must be closed under predecessors") {
  // 0 -a-> 1 -c-> 3 and 0 -a-> 2 -d-> 4, plus 5 -b-> 1, 6 -b-> 2; relating
  // 1 and 2 (not required) forces 5 and 6 to be related as well.
  Wfa a = ParseWfa(
      "wfa v1 tropical\ninitial 0 0\ninitial 5 0\ninitial 6 0\n"
      "final 3 0\nfinal 4 0\n"
      "trans 0 1 a 0\ntrans 0 2 a 0\ntrans 1 3 c 0\ntrans 2 4 d 0\n"
      "trans 5 1 b 0\ntrans 6 2 b 0\n");
  Relation r = CommonFutureRelation(a);
  r.SetSymmetric(1, 2);
  AdmissibilityReport report = ValidateAdmissible(a, r);
  CHECK_FALSE(report.ok);
  CHECK(report.missing.empty());
  CHECK_FALSE(report.incompatible.empty());
  r.SetSymmetric(5, 6);
  CHECK(ValidateAdmissible(a, r).ok);
}

TEST_CASE("relation parsing") {
  Relation r = ParseRelation(4, "# pairs\nrel 1 2\n\nrel 0 0\n");
  CHECK(r.Contains(2, 1));
  CHECK(r.Contains(0, 0));
  CHECK_FALSE(r.Contains(3, 3));
  CHECK_THROWS_AS(ParseRelation(4, "rel 1 9\n"), ParseError);
  CHECK_THROWS_AS(ParseRelation(4, "pair 1 2\n"), ParseError);
  CHECK_THROWS_AS(ParseRelation(4, "rel 1\n"), ParseError);
}
