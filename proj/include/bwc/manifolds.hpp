#pragma once

#include <string>

#include "bwc/lattice.hpp"

namespace bwc {

/// A simply-connected symplectic 4-manifold as seen by its second
/// cohomology: c1 and the integral symplectic class, both evaluated on a
/// fixed basis of H_2.
struct SymplecticFourManifoldDescriptor {
  std::string name;
  Integer b2 = 0;
  Integer b2_plus = 0;
  CovectorZ c1;
  CovectorZ omega;
  bool spin = false;
};

/// Boothby-Wang total space together with the invariants of its contact
/// structure.
struct FiveManifoldContact {
  Integer b2_X = 0;
  bool spin_X = true;
  Integer level = 0;  // divisibility of c1(xi)
  Integer delta = 0;  // canonical representative of c1(A0), see boothby_wang()
  Integer dK = 0;     // divisibility of the canonical class
  std::string barden_name;

  bool operator==(const FiveManifoldContact&) const = default;
};

/// Throws Error with a code naming the first violated invariant.
const SymplecticFourManifoldDescriptor& validate(const SymplecticFourManifoldDescriptor& m);

/// "#n S²×S³" for spin, "#n S²×S³ # S²×̃S³" for non-spin, where n counts the
/// untwisted summands; "S⁵" for the empty sum.
std::string barden_name(Integer b2_X, bool spin);

/// Raw c1(A0) for the particular A0 returned by solve_unit(omega).
Integer raw_delta(const SymplecticFourManifoldDescriptor& m);

/// Canonical form of c1(A0): residue in [0, level) for level > 0, |delta|
/// for level 0. Independent of the choice of A0.
Integer canonical_delta(Integer raw, Integer level);

FiveManifoldContact boothby_wang(const SymplecticFourManifoldDescriptor& m);

bool diffeomorphic(const FiveManifoldContact& x, const FiveManifoldContact& y);
bool almost_contact_equivalent(const FiveManifoldContact& x, const FiveManifoldContact& y);

}  // namespace bwc
