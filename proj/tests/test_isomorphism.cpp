#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bwc/isomorphism.hpp"

using namespace bwc;

namespace {

FiveManifoldContact contact(Integer level, Integer delta, Integer dK) {
  FiveManifoldContact x;
  x.b2_X = 2;
  x.level = level;
  x.delta = delta;
  x.dK = dK;
  x.spin_X = level % 2 == 0;
  return x;
}

void check_witness(const IsomorphismReport& r, Integer delta, Integer delta_p, Integer b2M) {
  REQUIRE(r.witness.has_value());
  std::set<GeneratorIndex> sources, targets;
  for (const auto& t : *r.witness) {
    CHECK(deg_q(t.source.k, t.source.i, delta, b2M) ==
          -2 * r.level * t.alpha + deg_q(t.target.k, t.target.i, delta_p, b2M));
    CHECK(sources.insert(t.source).second);
    CHECK(targets.insert(t.target).second);
  }
}

}  // namespace

TEST_CASE("decide") {
  SUBCASE("small divisibilities on positive level") {
    const auto r = decide(12, 2, 3);
    CHECK(r.decision == Decision::Isomorphic);
    CHECK(r.decision_case == DecisionCase::PositiveLevelSmallDivisibilities);
    CHECK_FALSE(r.witness.has_value());
  }
  SUBCASE("level zero") {
    const auto r = decide(0, 2, 3);
    CHECK(r.decision == Decision::NotIsomorphic);
    CHECK(r.decision_case == DecisionCase::LevelZeroDivisibilitiesDiffer);
    REQUIRE(r.distinguisher_lowest.has_value());
    CHECK(*r.distinguisher_lowest == std::pair<Integer, Integer>{2, 4});
    CHECK(decide(0, 5, 5).decision_case == DecisionCase::LevelZeroEqualDivisibilities);
    CHECK(decide(0, 0, 0).decision == Decision::Isomorphic);
  }
  SUBCASE("large divisibilities") {
    const auto r = decide(8, 4, 8);
    CHECK(r.decision == Decision::NotIsomorphic);
    CHECK(r.decision_case == DecisionCase::LargeDivisibilitiesDiffer);
    CHECK(r.distinguisher_b == 3);
    CHECK(decide(8, 8, 4).distinguisher_b == 3);
    CHECK(decide(4, 4, 2).distinguisher_b == 2);
    CHECK(decide(24, 8, 8).decision_case == DecisionCase::EqualLargeDivisibilities);
  }
  SUBCASE("inconsistent input") {
    for (const auto& [d, a, b] : {std::tuple<Integer, Integer, Integer>{8, 3, 4}, {5, 2, 5}, {6, 0, 3}, {-4, 2, 2}}) {
      try {
        decide(d, a, b);
        FAIL("expected an error");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentDivisibility);
      }
    }
  }
  CHECK(to_string(DecisionCase::LargeDivisibilitiesDiffer) == "large_divisibilities_differ");
  CHECK(to_string(Decision::NotIsomorphic) == "not_isomorphic");
}

TEST_CASE("build_witness") {
  SUBCASE("identical spectra give the identity") {
    const auto s = spectrum(contact(10, 5, 5), 3, 20);
    const auto r = build_witness(s, s, 20);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == s.q_degrees.size());
    for (const auto& t : *r.witness) {
      CHECK(t.alpha == 0);
      CHECK(t.source == t.target);
    }
  }
  SUBCASE("level 12, delta 3 vs 9") {
    const auto s = spectrum(contact(12, 3, 3), 3, 30);
    const auto sp = spectrum(contact(12, 9, 3), 3, 30);
    const auto r = build_witness(s, sp, 30);
    check_witness(r, 3, 9, 3);
    bool seen = false;
    for (const auto& t : *r.witness) {
      if (t.source != GeneratorIndex{1, 0}) continue;
      seen = true;
      CHECK(deg_q(1, 0, 3, 3) == 4);
      CHECK(residue_class(deg_q(t.target.k, t.target.i, 9, 3), 12) == 2);
    }
    CHECK(seen);
  }
  SUBCASE("level 0 identity, lowest degrees 8") {
    const auto s = spectrum(contact(0, 5, 5), 3, 6);
    const auto r = build_witness(s, s, 6);
    check_witness(r, 5, 5, 3);
    CHECK(deg_q(1, 0, 5, 3) == 8);
  }
  SUBCASE("small divisibilities on level 6") {
    const auto s = spectrum(contact(6, 2, 2), 3, 12);
    const auto sp = spectrum(contact(6, 3, 3), 3, 12);
    check_witness(build_witness(s, sp, 12), 2, 3, 3);
  }
  SUBCASE("errors") {
    const auto a = spectrum(contact(8, 4, 4), 3, 16);
    const auto b = spectrum(contact(8, 0, 8), 3, 16);
    try {
      build_witness(a, b, 16);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotIsomorphic);
    }
    CHECK_THROWS_AS(build_witness(a, spectrum(contact(4, 0, 4), 3, 16), 16), Error);
    CHECK_THROWS_AS(build_witness(a, a, 17), Error);
  }
}

TEST_CASE("witness exhaustive over small levels") {
  for (Integer d = 1; d <= 12; ++d) {
    for (Integer delta = 0; delta < d; ++delta) {
      for (Integer delta_p = 0; delta_p < d; ++delta_p) {
        const Integer dK = checked::gcd(delta, d);
        const Integer dK_p = checked::gcd(delta_p, d);
        if (decide(d, dK, dK_p).decision != Decision::Isomorphic) continue;
        const Integer k_max = 2 * d;
        const auto r = build_witness(spectrum(contact(d, delta, dK), 3, k_max),
                                     spectrum(contact(d, delta_p, dK_p), 3, k_max), k_max);
        CAPTURE(d);
        CAPTURE(delta);
        CAPTURE(delta_p);
        check_witness(r, delta, delta_p, 3);
        CHECK_FALSE(r.witness->empty());
      }
    }
  }
}
