#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bwc/geography.hpp"
#include "bwc/selftest.hpp"

using namespace bwc;

namespace {

CovectorZ cov(std::initializer_list<Integer> v) {
  CovectorZ c(static_cast<Eigen::Index>(v.size()));
  Eigen::Index j = 0;
  for (Integer x : v) c(j++) = x;
  return c;
}

std::vector<std::string> families(const std::vector<GeographyEntry>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.family + (e.m ? "(m=" + std::to_string(*e.m) + ")" : ""));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("divisor counts") {
  CHECK(count_N(12) == 3);
  CHECK(count_N(5) == 1);
  CHECK(count_N(4) == 1);
  CHECK(count_N_prime(20) == 1);
  CHECK(count_N_prime(12) == 0);
  CHECK(count_N_prime(60) == 2);
  CHECK_THROWS_AS(count_N(3), Error);
  CHECK_THROWS_AS(count_N_prime(15), Error);
}

TEST_CASE("catalog realizability") {
  const auto& c = Catalog::builtin();
  CHECK(families(c.realizable(10, 5)) == std::vector<std::string>{"Dolgachev", "HomotopyElliptic(m=1)"});
  CHECK(families(c.realizable(22, 4)) == std::vector<std::string>{"HomotopyElliptic(m=2)"});
  for (Integer k = 1; k <= 30; ++k) CHECK(c.realizable(11, k).empty());
  CHECK(c.realizable(10, 4).empty());
  for (Integer r = 2; r <= 200; ++r)
    for (Integer k = 1; k <= 20; ++k)
      for (const auto& e : c.realizable(r, k)) CHECK(entry_consistent(e));
}

TEST_CASE("lower and upper bounds") {
  const auto q = Q_lower_bound(10, 15);
  CHECK(q.count == 2);
  CHECK(q.divisibilities == std::vector<Integer>{5, 15});
  CHECK(Q_lower_bound(22, 12).count == 3);
  CHECK(Q_lower_bound(10, 12).count == 0);

  const auto u = Q_upper_bound(21, 12);
  CHECK(u.N == 3);
  CHECK(u.refined == 0);
  CHECK_FALSE(Q_upper_bound(22, 12).refined.has_value());
  const auto odd = Q_upper_bound(9, 7);
  CHECK(odd.N == 1);
  CHECK_FALSE(odd.refined.has_value());
  CHECK_THROWS_AS(Q_lower_bound(1, 8), Error);
  CHECK_THROWS_AS(Q_upper_bound(10, 3), Error);
}

TEST_CASE("bounds are consistent across families") {
  for (Integer n = 1; n <= 5; ++n) {
    for (Integer d = 4; d <= 100; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      if (d % 2 == 1 && d >= 5) CHECK(Q_lower_bound(12 * n - 2, d).count == count_N(d));
      if (d % 2 == 0) {
        CHECK(Q_lower_bound(24 * n - 2, d).count == count_N(d));
        CHECK(Q_lower_bound(24 * n - 14, d).count >= count_N_prime(d));
      }
    }
  }
  for (Integer r = 2; r <= 60; ++r) {
    for (Integer d = 4; d <= 60; ++d) {
      const auto lower = Q_lower_bound(r, d).count;
      const auto upper = Q_upper_bound(r, d);
      CHECK(lower <= upper.N);
      if (upper.refined) CHECK(lower <= *upper.refined);
    }
  }
}

TEST_CASE("realize_level") {
  const SymplecticFourManifoldDescriptor base{"k2", 4, 3, cov({2, 0, 0, 0}), cov({1, 0, 0, 0}), false};
  const auto r = realize_level(base, 3);
  CHECK(r.level == 6);
  CHECK(r.omega_adapted == cov({1, 3, 0, 0}));
  CHECK(lattice::quotient_divisibility(cov({2, 0, 0, 0}), cov({1, 3, 0, 0})) == 6);
  CHECK(r.hypothesis_in_scope);
  CHECK_FALSE(r.hypothesis.empty());

  const auto one = realize_level(base, 1);
  CHECK(one.level == 2);

  const SymplecticFourManifoldDescriptor skew{"skew", 5, 3, cov({-3, 6, 9, 0, 12}), cov({0, 0, 0, 1, 0}), false};
  for (Integer m = 1; m <= 12; ++m) {
    const auto out = realize_level(skew, m);
    auto deformed = skew;
    deformed.omega = out.omega;
    CHECK(boothby_wang(deformed).level == 3 * m);
    CHECK(out.basis.matrix * out.basis.inverse == MatrixZ::Identity(5, 5));
  }

  const SymplecticFourManifoldDescriptor dolgachev{"d", 10, 1, -5 * cov({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                                                   cov({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}), false};
  CHECK(realize_level(dolgachev, 2).hypothesis_in_scope);
  const SymplecticFourManifoldDescriptor rational{"r", 3, 1, cov({3, 1, 1}), cov({1, 0, 0}), false};
  CHECK_FALSE(realize_level(rational, 2).hypothesis_in_scope);

  try {
    realize_level({"zero", 3, 1, cov({0, 0, 0}), cov({1, 0, 0}), true}, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroFunctional);
  }
  CHECK_THROWS_AS(realize_level(base, 0), Error);
}

TEST_CASE("contact_count_report") {
  const auto odd = contact_count_report(10, 5);
  CHECK(odd.manifold_name == "#8 S²×S³ # S²×̃S³");
  CHECK(odd.lower_bound == 1);
  CHECK(odd.lower_bound == count_N(5));
  CHECK(odd.exact);

  const auto even = contact_count_report(22, 4);
  CHECK(even.manifold_name == "#21 S²×S³");
  CHECK(even.lower_bound == 1);

  const auto none = contact_count_report(10, 4);
  CHECK(none.lower_bound == 0);
  CHECK(none.upper_bound_N == 1);
  CHECK_FALSE(none.upper_bound_refined.has_value());
  CHECK_FALSE(none.exact);

  CHECK_FALSE(contact_count_report(21, 60).exact);
  CHECK_THROWS_AS(contact_count_report(10, 2), Error);
}

TEST_CASE("custom catalog") {
  const Catalog c({{"Toy", MParity::Any, 4, 2, 0, 1, DivisibilityConstraint::Any}});
  const auto e = c.realizable(14, 6);
  REQUIRE(e.size() == 1);
  CHECK(e[0].m == 3);
  CHECK(Q_lower_bound(14, 12, c).count == 3);
}
