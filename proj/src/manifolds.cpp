#include "bwc/manifolds.hpp"

namespace bwc {

namespace {

bool all_even(const CovectorZ& c) {
  for (Eigen::Index j = 0; j < c.size(); ++j)
    if (c(j) % 2 != 0) return false;
  return true;
}

bool congruent_mod2(const CovectorZ& a, const CovectorZ& b) {
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if ((a(j) - b(j)) % 2 != 0) return false;
  return true;
}

}  // namespace

const SymplecticFourManifoldDescriptor& validate(const SymplecticFourManifoldDescriptor& m) {
  const std::string who = "descriptor '" + m.name + "': ";
  if (m.b2 < 1) throw Error(ErrorCode::B2OutOfRange, who + "b2 must be positive");
  if (m.c1.size() != m.b2 || m.omega.size() != m.b2) {
    throw Error(ErrorCode::LengthMismatch, who + "c1 and omega must have length b2 = " + std::to_string(m.b2));
  }
  if (m.b2_plus < 1 || m.b2_plus > m.b2) {
    throw Error(ErrorCode::B2PlusOutOfRange, who + "b2_plus must lie in [1, b2]");
  }
  if (m.b2_plus % 2 == 0) throw Error(ErrorCode::B2PlusEven, who + "b2_plus must be odd");
  if (lattice::divisibility(m.omega) != 1) throw Error(ErrorCode::OmegaDivisible, who + "omega divisible");
  if (m.spin && !all_even(m.c1)) throw Error(ErrorCode::SpinParityClash, who + "spin/parity clash: c1 must be even");
  return m;
}

std::string barden_name(Integer b2_X, bool spin) {
  if (spin) return b2_X == 0 ? "S⁵" : "#" + std::to_string(b2_X) + " S²×S³";
  const Integer untwisted = b2_X - 1;
  if (untwisted == 0) return "S²×̃S³";
  return "#" + std::to_string(untwisted) + " S²×S³ # S²×̃S³";
}

Integer raw_delta(const SymplecticFourManifoldDescriptor& m) {
  return lattice::evaluate(m.c1, lattice::solve_unit(m.omega));
}

Integer canonical_delta(Integer raw, Integer level) {
  if (level == 0) return checked::abs(raw);
  return checked::mod(raw, level);
}

FiveManifoldContact boothby_wang(const SymplecticFourManifoldDescriptor& m) {
  validate(m);
  FiveManifoldContact x;
  x.b2_X = m.b2 - 1;
  x.level = lattice::quotient_divisibility(m.c1, m.omega);
  // X is spin iff w2(M) = c1 mod 2 is 0 or e = omega mod 2.
  x.spin_X = all_even(m.c1) || congruent_mod2(m.c1, m.omega);
  x.dK = lattice::divisibility(m.c1);
  x.delta = canonical_delta(raw_delta(m), x.level);
  x.barden_name = barden_name(x.b2_X, x.spin_X);
  return x;
}

bool diffeomorphic(const FiveManifoldContact& x, const FiveManifoldContact& y) {
  return x.b2_X == y.b2_X && (x.level % 2) == (y.level % 2);
}

bool almost_contact_equivalent(const FiveManifoldContact& x, const FiveManifoldContact& y) {
  return diffeomorphic(x, y) && x.level == y.level;
}

}  // namespace bwc
