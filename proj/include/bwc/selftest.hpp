#pragma once

// Brute-force oracles and the acceptance suite they drive. The oracles
// deliberately avoid the library's lattice routines: they enumerate
// definitions directly and use their own Euclid.

#include <string>
#include <vector>

#include "bwc/manifolds.hpp"

namespace bwc::selftest {

namespace oracle {

Integer euclid_gcd(Integer a, Integer b);

/// Largest d with c = d*R + gamma*w, |gamma| <= bound and |R_j| <= bound;
/// 0 when c is a multiple of w.
Integer quotient_divisibility_search(const CovectorZ& c, const CovectorZ& w, Integer bound);

/// Divisors of d by trial division over 1..d.
std::vector<Integer> divisors(Integer d);

/// Isomorphism criterion stated as the literal three-clause disjunction.
bool isomorphic_by_conditions(Integer d, Integer dK, Integer dK_prime);

}  // namespace oracle

/// Named descriptors shipped with the project (also under data/examples).
std::vector<SymplecticFourManifoldDescriptor> bundled_descriptors();

/// Bundled descriptors followed by a deterministic pseudo-random sample.
std::vector<SymplecticFourManifoldDescriptor> test_corpus(std::size_t random_count = 600);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

CriterionResult lattice_oracle();
CriterionResult level_realization_arithmetic();
CriterionResult delta_gcd_relation();
CriterionResult residue_class_oracle();
CriterionResult decision_table();
CriterionResult spin_level_coherence();
CriterionResult applications_reproduction();
CriterionResult headline_comparison();

std::vector<CriterionResult> run_all();

std::string format_line(const CriterionResult& r);

}  // namespace bwc::selftest
