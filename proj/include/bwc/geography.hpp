#pragma once

/**
 * Geography of symplectic 4-manifolds with divisible canonical class and
 * the contact-structure counts it yields.
 *
 * The catalog is a list of family rules. A rule describes a family indexed
 * by m >= 1 (or a single manifold when the slopes are zero) through
 * b2 = b2_slope * m + b2_offset and b2_plus = b2_plus_slope * m +
 * b2_plus_offset, a parity restriction on m, and the divisibilities k of
 * the canonical class that the family realizes.
 */

#include <optional>
#include <string>
#include <vector>

#include "bwc/manifolds.hpp"

namespace bwc {

enum class MParity { Any, Even, Odd };
enum class DivisibilityConstraint { Any, Odd };

struct FamilyRule {
  std::string family;  // "HomotopyElliptic", "Dolgachev", ...
  MParity m_parity = MParity::Any;
  Integer b2_slope = 0;
  Integer b2_offset = 0;
  Integer b2_plus_slope = 0;
  Integer b2_plus_offset = 0;
  DivisibilityConstraint dK_constraint = DivisibilityConstraint::Any;

  bool indexed() const { return b2_slope != 0; }
  bool operator==(const FamilyRule&) const = default;
};

/// A concrete catalog member realizing canonical-class divisibility dK.
struct GeographyEntry {
  std::string family;
  std::optional<Integer> m;
  Integer b2 = 0;
  Integer b2_plus = 0;
  Integer dK = 0;
  DivisibilityConstraint constraint = DivisibilityConstraint::Any;

  bool operator==(const GeographyEntry&) const = default;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<FamilyRule> rules);

  /// Homotopy elliptic surfaces (m even: any k; m odd: odd k) and Dolgachev
  /// surfaces (odd k).
  static const Catalog& builtin();

  const std::vector<FamilyRule>& rules() const { return rules_; }

  std::vector<GeographyEntry> realizable(Integer r, Integer k) const;

 private:
  std::vector<FamilyRule> rules_;
};

/// Invariants every entry must satisfy; known families get their own checks.
bool entry_consistent(const GeographyEntry& e);

Integer count_N(Integer d);
Integer count_N_prime(Integer d);

struct LowerBound {
  Integer count = 0;
  std::vector<Integer> divisibilities;   // the k >= 4 dividing d that are realized
  std::vector<GeographyEntry> entries;
};

LowerBound Q_lower_bound(Integer r, Integer d, const Catalog& catalog = Catalog::builtin());

struct UpperBound {
  Integer N = 0;
  std::optional<Integer> refined;  // N'(d) when d even and r != 2 mod 4
};

UpperBound Q_upper_bound(Integer r, Integer d);

struct LevelRealization {
  CovectorZ omega;          // new symplectic class on the original basis
  CovectorZ omega_adapted;  // (1, m, 0, ..., 0)
  CovectorZ K_adapted;      // (k, 0, ..., 0)
  AdaptedBasis<Integer> basis;
  Integer level = 0;
  std::string hypothesis;
  bool hypothesis_in_scope = false;
};

/// Deforms the symplectic class along the canonical class so that the
/// Boothby-Wang level becomes m * d(K).
LevelRealization realize_level(const SymplecticFourManifoldDescriptor& m_desc, Integer multiple);

struct CountReport {
  std::string manifold_name;
  Integer r = 0;
  Integer level = 0;
  Integer lower_bound = 0;
  Integer upper_bound_N = 0;
  std::optional<Integer> upper_bound_refined;
  bool exact = false;
  std::vector<Integer> realized_divisibilities;
  std::vector<GeographyEntry> realizing_entries;

  bool operator==(const CountReport&) const = default;
};

CountReport contact_count_report(Integer r, Integer d, const Catalog& catalog = Catalog::builtin());

std::string_view to_string(MParity p);
std::string_view to_string(DivisibilityConstraint c);

}  // namespace bwc
