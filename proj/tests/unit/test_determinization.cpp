#include "doctest.h"
#include "fixtures.hpp"
#include "reference.hpp"
#include "wfadis/automata.hpp"
#include "wfadis/determinization.hpp"
#include "wfadis/errors.hpp"
#include "wfadis/families.hpp"
#include "wfadis/oracle.hpp"
#include "wfadis/text_format.hpp"

using namespace wfadis;

TEST_CASE("A0 determinizes") {
  Wfa a = fixtures::A0();
  Wfa d = Determinize(a);
  CHECK(IsDeterministic(d));
  CHECK(oracle::EquivalentUpTo(a, d, 5).equivalent);
  CHECK(d.num_states() == 3);
}

TEST_CASE("deterministic input is reproduced") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    oracle::RandomWfaConfig c;
    c.seed = seed;
    c.deterministic = true;
    c.num_states = 5;
    c.transition_density = 0.4;
    Wfa a = oracle::RandomWfa(c);
    Wfa d = Trim(Determinize(a));
    CHECK(d.num_states() == a.num_states());
    CHECK(d.transitions().size() == a.transitions().size());
    CHECK(oracle::EquivalentUpTo(a, d, 6).equivalent);
  }
}

TEST_CASE("exponential gap family needs 2^n states") {
  Wfa a = families::ExponentialGap(3);
  Wfa d = Determinize(a);
  CHECK(d.num_states() >= 8);
  CHECK(oracle::EquivalentUpTo(a, d, 8).equivalent);
}

TEST_CASE("unequal cycles are not determinizable") {
  Wfa a = fixtures::DisjointFutureCycles();
  CHECK_THROWS_AS(Determinize(a, 1000), NotDeterminizedWithinLimit);
  try {
    Determinize(a, 1000);
  } catch (const NotDeterminizedWithinLimit &e) {
    CHECK(e.limit() == 1000);
    CHECK(std::string(e.what()).find("1000") != std::string::npos);
  }
}

TEST_CASE("probability semiring is rejected") {
  CHECK_THROWS_AS(
      Determinize(ParseWfa("wfa v1 probability\ninitial 0 1\nfinal 0 1\n")),
      UnsupportedOperation);
}

TEST_CASE("random acyclic automata determinize equivalently") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracle::RandomWfaConfig c;
    c.seed = seed;
    c.acyclic = true;
    c.num_states = 3 + static_cast<int>(seed % 6);
    c.num_initial = 1 + static_cast<int>(seed % 2);
    c.alphabet_size = 2;
    c.transition_density = 0.35;
    Wfa a = oracle::RandomWfa(c);
    Wfa d = Determinize(a);
    CHECK(IsDeterministic(d));
    auto la = ref::Language(a, a.num_states());
    auto ld = ref::Language(d, a.num_states());
    REQUIRE(la.size() == ld.size());
    for (const auto &[x, e] : la) CHECK(ld.at(x).weight == e.weight);
  }
}
