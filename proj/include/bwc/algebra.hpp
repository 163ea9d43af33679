#pragma once

/**
 * Generator data of the graded algebra attached to a Boothby-Wang
 * fibration: polynomials in q_{k,i} (k >= 1, 0 <= i <= b2(M)+1) over the
 * Laurent ring in z_1..z_N, N = b2(X). Only degrees are modelled.
 *
 *   deg(z_n)     = -2 c1(B_n)
 *   deg(q_{k,i}) = degDelta_i - 2 + 2 * delta * k
 *
 * with degDelta_i = 0, 2, 4 for i = 0, 1..b2(M), b2(M)+1.
 */

#include <compare>
#include <optional>
#include <vector>

#include "bwc/manifolds.hpp"

namespace bwc {

struct GeneratorIndex {
  Integer k = 1;
  Integer i = 0;

  auto operator<=>(const GeneratorIndex&) const = default;
};

struct QDegree {
  GeneratorIndex index;
  Integer degree = 0;

  bool operator==(const QDegree&) const = default;
};

enum class ResidueStatus { Empty, Infinite };

struct ResidueClassTable {
  Integer level = 1;
  Integer dK = 1;
  std::vector<ResidueStatus> status;  // indexed by b in [0, level)

  bool operator==(const ResidueClassTable&) const = default;
};

struct DegreeSpectrum {
  Integer level = 0;
  Integer delta = 0;
  Integer a = 0;  // b2(M) + 1
  Integer k_max = 1;
  std::vector<QDegree> q_degrees;     // lexicographic in (k, i)
  std::vector<Integer> z_degrees;     // (-2 level, 0, ..., 0), length b2(M) - 1
  std::optional<ResidueClassTable> residues;  // present iff level >= 1

  Integer b2M() const { return a - 1; }
  /// d(K) recovered from gcd(delta, level), with gcd(x, 0) = x.
  Integer dK() const;

  bool operator==(const DegreeSpectrum&) const = default;
};

Integer deg_delta_i(Integer i, Integer b2M);
Integer deg_q(Integer k, Integer i, Integer delta, Integer b2M);

ResidueStatus qb_status(Integer b, Integer d, Integer dK);

/// Enumerates all (k, i) with k <= k_max whose degree is 2b mod 2d.
std::vector<GeneratorIndex> qb_members_bruteforce(Integer b, Integer d, Integer delta, Integer b2M,
                                                  Integer k_max);

ResidueClassTable residue_table(Integer d, Integer dK);

/// Residue class b in [0, d) of an even degree in Z_{2d}.
Integer residue_class(Integer degree, Integer d);

DegreeSpectrum spectrum(const FiveManifoldContact& x, Integer b2M, Integer k_max);

}  // namespace bwc
