#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bwc/algebra.hpp"

namespace bwc {

enum class Decision { Isomorphic, NotIsomorphic };

/// Which clause of the isomorphism criterion applied. The first three are
/// the isomorphic cases, the last two the ways the criterion fails.
enum class DecisionCase {
  PositiveLevelSmallDivisibilities,  // d >= 1, d(K), d(K') <= 3
  LevelZeroEqualDivisibilities,      // d = 0, d(K) = d(K')
  EqualLargeDivisibilities,          // d >= 4, d(K) = d(K') >= 4
  LevelZeroDivisibilitiesDiffer,
  LargeDivisibilitiesDiffer,
  // Not produced by decide(): the structures are not on a common level of
  // a common 5-manifold, so the criterion does not apply.
  LevelsDiffer,
  ManifoldsDiffer,
};

std::string_view to_string(Decision d);
std::string_view to_string(DecisionCase c);

/// q_{k,i} -> z'_1^alpha q'_{psi(k,i)}
struct WitnessTriple {
  GeneratorIndex source;
  Integer alpha = 0;
  GeneratorIndex target;

  bool operator==(const WitnessTriple&) const = default;
};

struct IsomorphismReport {
  Integer level = 0;
  Integer dK = 0;
  Integer dK_prime = 0;
  Decision decision = Decision::NotIsomorphic;
  DecisionCase decision_case = DecisionCase::LargeDivisibilitiesDiffer;
  std::optional<std::vector<WitnessTriple>> witness;
  /// Generators left unpaired at the truncation boundary (source side, target side).
  std::vector<GeneratorIndex> deferred_source;
  std::vector<GeneratorIndex> deferred_target;
  std::optional<Integer> distinguisher_b;                            // d >= 4
  std::optional<std::pair<Integer, Integer>> distinguisher_lowest;   // d = 0

  bool operator==(const IsomorphismReport&) const = default;
};

IsomorphismReport decide(Integer d, Integer dK, Integer dK_prime);

/// Explicit truncated isomorphism between two spectra on the same level.
IsomorphismReport build_witness(const DegreeSpectrum& source, const DegreeSpectrum& target, Integer k_max);

}  // namespace bwc
