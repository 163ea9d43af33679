#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bwc/manifolds.hpp"
#include "bwc/selftest.hpp"

using namespace bwc;

namespace {

CovectorZ padded(std::initializer_list<Integer> head, Integer n) {
  CovectorZ c = CovectorZ::Zero(n);
  Eigen::Index j = 0;
  for (Integer x : head) c(j++) = x;
  return c;
}

SymplecticFourManifoldDescriptor make(Integer b2, Integer b2_plus, CovectorZ c1, CovectorZ omega, bool spin) {
  return {"m", b2, b2_plus, std::move(c1), std::move(omega), spin};
}

ErrorCode code_of(const SymplecticFourManifoldDescriptor& m) {
  try {
    validate(m);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("descriptor unexpectedly valid");
  return ErrorCode::InternalConsistency;
}

FiveManifoldContact contact(Integer b2_X, Integer level) {
  FiveManifoldContact x;
  x.b2_X = b2_X;
  x.level = level;
  x.spin_X = level % 2 == 0;
  return x;
}

}  // namespace

TEST_CASE("validate") {
  const auto dolgachev = make(10, 1, padded({-5}, 10), padded({1, 1}, 10), false);
  CHECK_NOTHROW(validate(dolgachev));

  CHECK(code_of(make(3, 1, padded({2}, 3), padded({2, 4}, 3), false)) == ErrorCode::OmegaDivisible);
  CHECK(code_of(make(3, 1, padded({1}, 3), padded({1}, 3), true)) == ErrorCode::SpinParityClash);
  CHECK(code_of(make(0, 1, CovectorZ(0), CovectorZ(0), false)) == ErrorCode::B2OutOfRange);
  CHECK(code_of(make(3, 1, padded({1}, 2), padded({1}, 3), false)) == ErrorCode::LengthMismatch);
  CHECK(code_of(make(3, 5, padded({1}, 3), padded({1}, 3), false)) == ErrorCode::B2PlusOutOfRange);
  CHECK(code_of(make(3, 0, padded({1}, 3), padded({1}, 3), false)) == ErrorCode::B2PlusOutOfRange);
  CHECK(code_of(make(4, 2, padded({1}, 4), padded({1}, 4), false)) == ErrorCode::B2PlusEven);
}

TEST_CASE("barden names") {
  CHECK(barden_name(0, true) == "S⁵");
  CHECK(barden_name(1, true) == "#1 S²×S³");
  CHECK(barden_name(1, false) == "S²×̃S³");
  CHECK(barden_name(9, false) == "#8 S²×S³ # S²×̃S³");
  CHECK(barden_name(21, true) == "#21 S²×S³");
}

TEST_CASE("boothby_wang") {
  SUBCASE("b2 = 2 with even c1") {
    const auto x = boothby_wang(make(2, 1, padded({2, 2}, 2), padded({1, 0}, 2), true));
    CHECK(x.spin_X);
    CHECK(x.barden_name == "#1 S²×S³");
    CHECK(x.b2_X == 1);
  }
  SUBCASE("b2 = 1 gives the 5-sphere on level 0") {
    const auto x = boothby_wang(make(1, 1, padded({3}, 1), padded({1}, 1), false));
    CHECK(x.level == 0);
    CHECK(x.barden_name == "S⁵");
    CHECK(x.dK == 3);
    CHECK(x.delta == 3);
  }
  SUBCASE("level k|sigma_2|") {
    const auto x = boothby_wang(make(4, 3, padded({2}, 4), padded({1, 3}, 4), false));
    CHECK(x.level == 6);
    CHECK(x.dK == 2);
    CHECK(selftest::oracle::euclid_gcd(x.delta, x.level) == 2);
    CHECK(x.spin_X);
  }
  SUBCASE("c1 = 0") {
    const auto x = boothby_wang(make(3, 1, padded({}, 3), padded({0, 0, 1}, 3), true));
    CHECK(x.level == 0);
    CHECK(x.dK == 0);
    CHECK(x.delta == 0);
  }
  SUBCASE("odd level is non-spin") {
    const auto x = boothby_wang(make(10, 1, padded({-5}, 10), padded({1, 1}, 10), false));
    CHECK(x.level == 5);
    CHECK(x.dK == 5);
    CHECK(x.delta == 0);
    CHECK_FALSE(x.spin_X);
    CHECK(x.barden_name == "#8 S²×S³ # S²×̃S³");
  }
}

TEST_CASE("canonical delta") {
  CHECK(canonical_delta(-3, 6) == 3);
  CHECK(canonical_delta(13, 6) == 1);
  CHECK(canonical_delta(-4, 0) == 4);
}

TEST_CASE("delta does not depend on the basis") {
  // Same manifold written in the basis e1' = e1 + e2, e2' = e2.
  const auto a = boothby_wang(make(2, 1, padded({4, 6}, 2), padded({1, 3}, 2), true));
  const auto b = boothby_wang(make(2, 1, padded({10, 6}, 2), padded({4, 3}, 2), true));
  CHECK(a == b);
}

TEST_CASE("diffeomorphism and almost contact equivalence") {
  CHECK(diffeomorphic(contact(9, 3), contact(9, 5)));
  CHECK_FALSE(diffeomorphic(contact(9, 3), contact(9, 4)));
  CHECK(diffeomorphic(contact(9, 3), contact(9, 3)));
  CHECK(almost_contact_equivalent(contact(9, 3), contact(9, 3)));
  CHECK_FALSE(almost_contact_equivalent(contact(9, 3), contact(9, 5)));
  CHECK_FALSE(almost_contact_equivalent(contact(9, 3), contact(8, 3)));
}

TEST_CASE("corpus invariants") {
  for (const auto& m : selftest::test_corpus(200)) {
    const auto x = boothby_wang(m);
    CAPTURE(m.name);
    CHECK(x.spin_X == (x.level % 2 == 0));
    CHECK(selftest::oracle::euclid_gcd(x.delta, x.level) == x.dK);
    CHECK(x.b2_X == m.b2 - 1);
    if (x.level > 0) {
      CHECK(x.delta >= 0);
      CHECK(x.delta < x.level);
    }
  }
}
