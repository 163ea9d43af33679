#include "bwc/selftest.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "bwc/algebra.hpp"
#include "bwc/cli.hpp"
#include "bwc/geography.hpp"
#include "bwc/isomorphism.hpp"

namespace bwc::selftest {

namespace oracle {

Integer euclid_gcd(Integer a, Integer b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer quotient_divisibility_search(const CovectorZ& c, const CovectorZ& w, Integer bound) {
  Integer best = 0;
  for (Integer gamma = -bound; gamma <= bound; ++gamma) {
    Integer g = 0;
    Integer largest = 0;
    for (Eigen::Index j = 0; j < c.size(); ++j) {
      const Integer v = c(j) - gamma * w(j);
      g = euclid_gcd(g, v);
      largest = std::max(largest, v < 0 ? -v : v);
    }
    // c itself lies on the line through w: its image in the quotient is 0.
    if (g == 0) return 0;
    // The largest admissible d is g itself whenever R = (c - gamma w)/g fits.
    if (largest / g <= bound) best = std::max(best, g);
  }
  return best;
}

std::vector<Integer> divisors(Integer d) {
  std::vector<Integer> out;
  for (Integer k = 1; k <= d; ++k)
    if (d % k == 0) out.push_back(k);
  return out;
}

bool isomorphic_by_conditions(Integer d, Integer dK, Integer dK_prime) {
  return (d >= 1 && dK <= 3 && dK_prime <= 3) || (d == 0 && dK == dK_prime) ||
         (d >= 4 && dK == dK_prime && dK >= 4);
}

}  // namespace oracle

namespace {

CovectorZ cov(std::initializer_list<Integer> v) {
  CovectorZ c(static_cast<Eigen::Index>(v.size()));
  Eigen::Index j = 0;
  for (Integer x : v) c(j++) = x;
  return c;
}

CovectorZ padded(std::initializer_list<Integer> head, Integer n) {
  CovectorZ c = CovectorZ::Zero(n);
  Eigen::Index j = 0;
  for (Integer x : head) c(j++) = x;
  return c;
}

SymplecticFourManifoldDescriptor descriptor(std::string name, Integer b2, Integer b2_plus, CovectorZ c1,
                                            CovectorZ omega, bool spin) {
  return {std::move(name), b2, b2_plus, std::move(c1), std::move(omega), spin};
}

std::string describe(const CovectorZ& c) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index j = 0; j < c.size(); ++j) os << (j ? "," : "") << c(j);
  os << ")";
  return os.str();
}

CriterionResult result(int id, std::string name, std::size_t checked, std::size_t failures,
                       const std::string& first_failure) {
  CriterionResult r{id, std::move(name), failures == 0, {}};
  std::ostringstream os;
  os << checked << " checks";
  if (failures) os << ", " << failures << " failed; first: " << first_failure;
  r.detail = os.str();
  return r;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

bool divides_or_zero(Integer d, Integer x) { return d == 0 ? x == 0 : x % d == 0; }

}  // namespace

std::vector<SymplecticFourManifoldDescriptor> bundled_descriptors() {
  return {
      descriptor("dolgachev-k5", 10, 1, padded({-5}, 10), padded({1, 1}, 10), false),
      descriptor("s5-b2-1", 1, 1, cov({3}), cov({1}), false),
      descriptor("b2-2-even-c1", 2, 1, cov({2, 2}), cov({1, 0}), true),
      descriptor("elliptic-level8-dK4", 22, 3, padded({-4}, 22), padded({1, 2}, 22), true),
      descriptor("elliptic-level8-dK8", 22, 3, padded({-8}, 22), padded({1, 1}, 22), true),
      descriptor("level6-dK2", 4, 3, cov({2, 0, 0, 0}), cov({1, 3, 0, 0}), false),
      descriptor("level6-dK3", 4, 3, cov({3, 0, 0, 0}), cov({1, 2, 0, 0}), false),
      descriptor("level0-dK2", 3, 1, cov({2, 4, 0}), cov({1, 2, 0}), true),
      descriptor("level0-dK3", 3, 1, cov({3, 6, 0}), cov({1, 2, 0}), false),
      descriptor("c1-zero", 3, 1, cov({0, 0, 0}), cov({0, 0, 1}), true),
  };
}

std::vector<SymplecticFourManifoldDescriptor> test_corpus(std::size_t random_count) {
  auto corpus = bundled_descriptors();
  std::mt19937_64 rng(20080501);
  auto uniform = [&rng](Integer lo, Integer hi) { return std::uniform_int_distribution<Integer>(lo, hi)(rng); };
  for (std::size_t n = 0; n < random_count; ++n) {
    const Integer b2 = uniform(1, 8);
    const Integer b2_plus = 2 * uniform(0, (b2 - 1) / 2) + 1;
    CovectorZ omega(b2);
    do {
      for (Eigen::Index j = 0; j < b2; ++j) omega(j) = uniform(-9, 9);
    } while (lattice::divisibility(omega) != 1);
    const Integer scale = uniform(1, 6);
    CovectorZ c1(b2);
    for (Eigen::Index j = 0; j < b2; ++j) c1(j) = scale * uniform(-6, 6);
    bool even = true;
    for (Eigen::Index j = 0; j < b2; ++j) even = even && c1(j) % 2 == 0;
    const bool spin = even && uniform(0, 1) == 1;
    corpus.push_back(descriptor("random-" + std::to_string(n), b2, b2_plus, c1, omega, spin));
  }
  // Structures produced by level realization.
  const CovectorZ base = cov({-3, 0, 6, 3});
  for (Integer m = 1; m <= 5; ++m) {
    auto d = descriptor("realized-m" + std::to_string(m), 4, 3, base, cov({1, 1, 0, 0}), false);
    d.omega = realize_level(d, m).omega;
    corpus.push_back(std::move(d));
  }
  return corpus;
}

// 1. Kernel-restriction quotient divisibility against the defining search.
CriterionResult lattice_oracle() {
  std::mt19937_64 rng(1);
  auto uniform = [&rng](Integer lo, Integer hi) { return std::uniform_int_distribution<Integer>(lo, hi)(rng); };
  Tally t;
  for (int n = 0; n < 1000; ++n) {
    const Integer rank = uniform(1, 5);
    CovectorZ c(rank), w(rank);
    for (Eigen::Index j = 0; j < rank; ++j) c(j) = uniform(-20, 20);
    do {
      for (Eigen::Index j = 0; j < rank; ++j) w(j) = uniform(-20, 20);
    } while ([&] {
      Integer g = 0;
      for (Eigen::Index j = 0; j < rank; ++j) g = oracle::euclid_gcd(g, w(j));
      return g != 1;
    }());
    const Integer fast = lattice::kernel_restriction_divisibility(c, w);
    const Integer via_api = lattice::quotient_divisibility(c, w);
    const Integer slow = oracle::quotient_divisibility_search(c, w, 400);
    t.expect(fast == slow && via_api == slow,
             "c=" + describe(c) + " w=" + describe(w) + ": kernel " + std::to_string(fast) + ", search " +
                 std::to_string(slow));
  }
  return result(1, "lattice oracle: quotient divisibility vs brute-force search", t.checked, t.failures, t.first);
}

// 2. Level of (k,0,...) modulo (s1,s2,0,...) and level realization.
CriterionResult level_realization_arithmetic() {
  Tally t;
  for (Integer k = 1; k <= 10; ++k) {
    for (Integer s1 = -10; s1 <= 10; ++s1) {
      for (Integer s2 = -10; s2 <= 10; ++s2) {
        if (oracle::euclid_gcd(s1, s2) != 1) continue;
        const Integer rank = 2 + (k + s1 + 30) % 3;
        const CovectorZ c = padded({k}, rank);
        const CovectorZ sigma = padded({s1, s2}, rank);
        const Integer got = lattice::quotient_divisibility(c, sigma);
        t.expect(got == k * (s2 < 0 ? -s2 : s2), "k=" + std::to_string(k) + " sigma=" + describe(sigma) +
                                                     " gave " + std::to_string(got));
      }
    }
  }
  const CovectorZ shape = cov({1, -2, 3, 5});
  for (Integer k = 1; k <= 10; ++k) {
    const CovectorZ c1 = -k * shape;
    const auto m_desc = descriptor("k" + std::to_string(k), 4, 3, c1, cov({2, 1, 0, -1}), false);
    for (Integer m = 1; m <= 10; ++m) {
      const auto out = realize_level(m_desc, m);
      auto deformed = m_desc;
      deformed.omega = out.omega;
      const Integer recomputed = boothby_wang(deformed).level;
      t.expect(out.level == m * k && recomputed == m * k && lattice::minor_divisibility(c1, out.omega) == m * k,
               "k=" + std::to_string(k) + " m=" + std::to_string(m) + " gave " + std::to_string(out.level));
    }
  }
  return result(2, "level realization: d = k|sigma_2| and d = m d(K)", t.checked, t.failures, t.first);
}

// 3. gcd(delta, level) = d(K) for every descriptor and several choices of A0.
CriterionResult delta_gcd_relation() {
  Tally t;
  std::mt19937_64 rng(3);
  for (const auto& m : test_corpus()) {
    const auto x = boothby_wang(m);
    const auto gcd0 = [](Integer a, Integer b) { return oracle::euclid_gcd(a, b); };
    t.expect(gcd0(x.delta, x.level) == x.dK, m.name + ": canonical delta");
    if (x.level == 0) t.expect(x.delta == x.dK, m.name + ": level 0 needs delta = d(K)");
    // Other admissible A0: shift by kernel vectors of omega.
    const VectorZ a0 = lattice::solve_unit(m.omega);
    const auto kernel = m.b2 > 1 ? lattice::kernel_basis(m.omega) : std::vector<VectorZ>{};
    for (int trial = 0; trial < 4; ++trial) {
      VectorZ shifted = a0;
      for (const auto& v : kernel) shifted += std::uniform_int_distribution<Integer>(-3, 3)(rng) * v;
      if (lattice::evaluate(m.omega, shifted) != 1) {
        t.expect(false, m.name + ": shifted A0 left the affine line omega = 1");
        continue;
      }
      const Integer raw = lattice::evaluate(m.c1, shifted);
      t.expect(gcd0(raw, x.level) == x.dK, m.name + ": raw delta " + std::to_string(raw));
      t.expect(canonical_delta(raw, x.level) == x.delta, m.name + ": canonical delta depends on A0");
    }
  }
  return result(3, "gcd(delta, level) = d(K) on the corpus", t.checked, t.failures, t.first);
}

// 4. Closed-form residue status against enumeration with k <= 2d.
CriterionResult residue_class_oracle() {
  Tally t;
  for (Integer d = 1; d <= 30; ++d) {
    for (Integer delta = 0; delta <= 30; ++delta) {
      const Integer dK = oracle::euclid_gcd(delta, d);
      if (dK < 1) continue;
      for (Integer b = 0; b < d; ++b) {
        const bool infinite = qb_status(b, d, dK) == ResidueStatus::Infinite;
        const bool found = !qb_members_bruteforce(b, d, delta, 2, 2 * d).empty();
        t.expect(infinite == found, "d=" + std::to_string(d) + " delta=" + std::to_string(delta) +
                                        " b=" + std::to_string(b));
      }
      if (dK >= 4) {
        t.expect(qb_status(2, d, dK) == ResidueStatus::Empty && qb_members_bruteforce(2, d, delta, 2, 2 * d).empty(),
                 "Q_2 nonempty for d(K)=" + std::to_string(dK));
      }
    }
  }
  return result(4, "residue classes: closed form vs enumeration", t.checked, t.failures, t.first);
}

namespace {

Integer representative_with_gcd(Integer d, Integer dK, bool largest) {
  if (d == 0) return dK;
  Integer pick = -1;
  for (Integer delta = 0; delta < d; ++delta) {
    if (oracle::euclid_gcd(delta, d) != dK) continue;
    if (pick < 0 || largest) pick = delta;
  }
  return pick;
}

FiveManifoldContact synthetic(Integer d, Integer dK, Integer delta) {
  FiveManifoldContact x;
  x.b2_X = 2;
  x.level = d;
  x.delta = delta;
  x.dK = dK;
  x.spin_X = d % 2 == 0;
  x.barden_name = barden_name(2, x.spin_X);
  return x;
}

}  // namespace

// 5. Decision table over d <= 24 with witnesses and distinguishers.
CriterionResult decision_table() {
  Tally t;
  constexpr Integer k_max = 50;
  constexpr Integer b2M = 3;
  for (Integer d = 0; d <= 24; ++d) {
    std::vector<Integer> ks;
    for (Integer k = 0; k <= 24; ++k)
      if (divides_or_zero(k, d)) ks.push_back(k);
    const auto tag = [d](Integer a, Integer b) {
      return "d=" + std::to_string(d) + " dK=" + std::to_string(a) + " dK'=" + std::to_string(b);
    };
    for (Integer a : ks) {
      t.expect(decide(d, a, a).decision == Decision::Isomorphic, tag(a, a) + ": not reflexive");
      for (Integer b : ks) {
        const auto r = decide(d, a, b);
        const bool iso = r.decision == Decision::Isomorphic;
        t.expect(iso == oracle::isomorphic_by_conditions(d, a, b), tag(a, b) + ": decision");
        t.expect(iso == (decide(d, b, a).decision == Decision::Isomorphic), tag(a, b) + ": not symmetric");
        for (Integer c : ks) {
          if (iso && decide(d, b, c).decision == Decision::Isomorphic)
            t.expect(decide(d, a, c).decision == Decision::Isomorphic, tag(a, b) + ": not transitive");
        }
        if (!iso && d >= 4) {
          const bool ok = r.distinguisher_b && qb_status(*r.distinguisher_b, d, a) != qb_status(*r.distinguisher_b, d, b);
          t.expect(ok, tag(a, b) + ": distinguisher");
          if (ok) {
            const Integer b_cls = *r.distinguisher_b;
            const bool left = !qb_members_bruteforce(b_cls, d, representative_with_gcd(d, a, false), b2M, 2 * d).empty();
            const bool right = !qb_members_bruteforce(b_cls, d, representative_with_gcd(d, b, false), b2M, 2 * d).empty();
            t.expect(left != right, tag(a, b) + ": distinguisher not confirmed by enumeration");
          }
        }
        if (!iso && d == 0) {
          const auto s = spectrum(synthetic(0, a, a), b2M, 1);
          const auto sp = spectrum(synthetic(0, b, b), b2M, 1);
          const auto low = [](const DegreeSpectrum& x) {
            Integer m = x.q_degrees.front().degree;
            for (const auto& q : x.q_degrees) m = std::min(m, q.degree);
            return m;
          };
          t.expect(r.distinguisher_lowest && r.distinguisher_lowest->first == low(s) &&
                       r.distinguisher_lowest->second == low(sp),
                   tag(a, b) + ": lowest degrees");
        }
        if (iso) {
          const Integer delta = representative_with_gcd(d, a, false);
          const Integer delta_p = representative_with_gcd(d, b, true);
          const auto s = spectrum(synthetic(d, a, delta), b2M, k_max);
          const auto sp = spectrum(synthetic(d, b, delta_p), b2M, k_max);
          const auto w = build_witness(s, sp, k_max);
          bool ok = w.witness && !w.witness->empty();
          std::set<GeneratorIndex> sources, targets;
          for (const auto& tr : w.witness ? *w.witness : std::vector<WitnessTriple>{}) {
            const Integer lhs = deg_q(tr.source.k, tr.source.i, delta, b2M);
            const Integer rhs = -2 * d * tr.alpha + deg_q(tr.target.k, tr.target.i, delta_p, b2M);
            ok = ok && lhs == rhs;
            ok = ok && sources.insert(tr.source).second && targets.insert(tr.target).second;
          }
          t.expect(ok, tag(a, b) + ": witness");
        }
      }
    }
  }
  return result(5, "isomorphism decision table, witnesses and distinguishers", t.checked, t.failures, t.first);
}

// 6. Spin type and level parity; level a multiple of d(K).
CriterionResult spin_level_coherence() {
  Tally t;
  for (const auto& m : test_corpus()) {
    const auto x = boothby_wang(m);
    t.expect(x.spin_X == (x.level % 2 == 0), m.name + ": spin vs level parity");
    t.expect(divides_or_zero(x.dK, x.level), m.name + ": level not a multiple of d(K)");
  }
  return result(6, "spin type matches level parity; d(K) divides level", t.checked, t.failures, t.first);
}

// 7. Counting functions and the contact-structure lower bounds.
CriterionResult applications_reproduction() {
  Tally t;
  auto n_bf = [](Integer d) {
    Integer c = 0;
    for (Integer k : oracle::divisors(d)) c += k >= 4;
    return c;
  };
  auto np_bf = [](Integer d) {
    Integer c = 0;
    for (Integer k : oracle::divisors(d)) c += k >= 4 && k % 2 == 1;
    return c;
  };
  t.expect(count_N(12) == 3, "N(12)");
  t.expect(count_N_prime(12) == 0, "N'(12)");
  t.expect(count_N(15) == 2, "N(15)");
  for (Integer d = 4; d <= 10000; ++d) {
    t.expect(count_N(d) == n_bf(d), "N(" + std::to_string(d) + ")");
    if (d % 2 == 0) t.expect(count_N_prime(d) == np_bf(d), "N'(" + std::to_string(d) + ")");
  }
  for (Integer d = 5; d <= 99; d += 2) t.expect(Q_lower_bound(10, d).count == count_N(d), "Q(10," + std::to_string(d) + ")");
  for (Integer d = 4; d <= 100; d += 2) {
    t.expect(Q_lower_bound(22, d).count == count_N(d), "Q(22," + std::to_string(d) + ")");
    t.expect(Q_lower_bound(10, d).count >= count_N_prime(d), "Q(10," + std::to_string(d) + ") vs N'");
  }
  for (Integer n = 1; n <= 3; ++n) {
    const std::string twisted = " S²×S³ # S²×̃S³";
    for (Integer d = 5; d <= 99; d += 2) {
      const auto rep = contact_count_report(12 * n - 2, d);
      t.expect(rep.manifold_name == "#" + std::to_string(12 * n - 4) + twisted && rep.lower_bound == count_N(d),
               "odd report n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    for (Integer d = 4; d <= 100; d += 2) {
      const auto rep = contact_count_report(24 * n - 2, d);
      t.expect(rep.manifold_name == "#" + std::to_string(24 * n - 3) + " S²×S³" && rep.lower_bound == count_N(d),
               "even report n=" + std::to_string(n) + " d=" + std::to_string(d));
      const auto rep2 = contact_count_report(24 * n - 14, d);
      t.expect(rep2.manifold_name == "#" + std::to_string(24 * n - 15) + " S²×S³" &&
                   rep2.lower_bound >= count_N_prime(d),
               "even report (N') n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  return result(7, "counting functions and lower bounds from the geography catalog", t.checked, t.failures,
                t.first);
}

// 8. Same almost contact class, inequivalent contact homology.
CriterionResult headline_comparison() {
  Tally t;
  const auto all = bundled_descriptors();
  const auto find = [&all](const std::string& name) {
    return *std::find_if(all.begin(), all.end(), [&](const auto& m) { return m.name == name; });
  };
  const auto c = cli::compare(find("elliptic-level8-dK4"), find("elliptic-level8-dK8"), 50);
  t.expect(c.first.contact.level == 8 && c.second.contact.level == 8, "levels");
  t.expect(c.first.contact.dK == 4 && c.second.contact.dK == 8, "divisibilities");
  t.expect(c.almost_contact, "almost contact equivalence");
  t.expect(c.contact_homology.decision == Decision::NotIsomorphic, "contact homology decision");
  t.expect(c.contact_homology.distinguisher_b == 3, "distinguisher");
  t.expect(c.verdict ==
               "equivalent as almost contact structures, inequivalent contact homology, distinguisher b=3",
           "verdict: " + c.verdict);
  const auto iso = cli::compare(find("level6-dK2"), find("level6-dK3"), 50);
  t.expect(iso.almost_contact && iso.contact_homology.decision == Decision::Isomorphic, "level 6, d(K) 2 vs 3");
  return result(8, "end-to-end comparison: level 8 with d(K) = 4 vs 8", t.checked, t.failures, t.first);
}

std::vector<CriterionResult> run_all() {
  return {lattice_oracle(),       level_realization_arithmetic(), delta_gcd_relation(),
          residue_class_oracle(), decision_table(),               spin_level_coherence(),
          applications_reproduction(), headline_comparison()};
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + r.detail +
         ")";
}

}  // namespace bwc::selftest
