#include "bwc/geography.hpp"

#include <algorithm>

namespace bwc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Precondition, what);
}

bool parity_ok(MParity p, Integer m) {
  switch (p) {
    case MParity::Any: return true;
    case MParity::Even: return m % 2 == 0;
    case MParity::Odd: return m % 2 != 0;
  }
  return false;
}

bool constraint_ok(DivisibilityConstraint c, Integer k) {
  return c == DivisibilityConstraint::Any || k % 2 != 0;
}

}  // namespace

std::string_view to_string(MParity p) {
  switch (p) {
    case MParity::Any: return "any";
    case MParity::Even: return "even";
    case MParity::Odd: return "odd";
  }
  return "any";
}

std::string_view to_string(DivisibilityConstraint c) {
  return c == DivisibilityConstraint::Any ? "any" : "odd";
}

Catalog::Catalog(std::vector<FamilyRule> rules) : rules_(std::move(rules)) {}

const Catalog& Catalog::builtin() {
  static const Catalog catalog({
      {"HomotopyElliptic", MParity::Even, 12, -2, 2, -1, DivisibilityConstraint::Any},
      {"HomotopyElliptic", MParity::Odd, 12, -2, 2, -1, DivisibilityConstraint::Odd},
      {"Dolgachev", MParity::Any, 0, 10, 0, 1, DivisibilityConstraint::Odd},
  });
  return catalog;
}

std::vector<GeographyEntry> Catalog::realizable(Integer r, Integer k) const {
  std::vector<GeographyEntry> out;
  if (k < 1) return out;
  for (const auto& rule : rules_) {
    if (!constraint_ok(rule.dK_constraint, k)) continue;
    GeographyEntry e{rule.family, std::nullopt, r, 0, k, rule.dK_constraint};
    if (rule.indexed()) {
      const Integer shifted = r - rule.b2_offset;
      if (shifted % rule.b2_slope != 0) continue;
      const Integer m = shifted / rule.b2_slope;
      if (m < 1 || !parity_ok(rule.m_parity, m)) continue;
      e.m = m;
      e.b2_plus = checked::add(checked::mul(rule.b2_plus_slope, m), rule.b2_plus_offset);
    } else {
      if (r != rule.b2_offset) continue;
      e.b2_plus = rule.b2_plus_offset;
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool entry_consistent(const GeographyEntry& e) {
  if (e.dK < 1 || e.b2 < 1 || e.b2_plus < 1 || e.b2_plus > e.b2) return false;
  if (!constraint_ok(e.constraint, e.dK)) return false;
  if (e.family == "HomotopyElliptic") {
    if (!e.m || *e.m < 1) return false;
    const Integer m = *e.m;
    if (e.b2 != 12 * m - 2 || e.b2_plus != 2 * m - 1) return false;
    return m % 2 == 0 || e.dK % 2 != 0;
  }
  if (e.family == "Dolgachev") return e.b2 == 10 && e.b2_plus == 1 && e.dK % 2 != 0;
  return true;
}

Integer count_N(Integer d) {
  require(d >= 4, "N(d) is defined for d >= 4");
  Integer count = 0;
  for (Integer f = 1; f * f <= d; ++f) {
    if (d % f != 0) continue;
    const Integer g = d / f;
    if (f >= 4) ++count;
    if (g != f && g >= 4) ++count;
  }
  return count;
}

Integer count_N_prime(Integer d) {
  require(d >= 4 && d % 2 == 0, "N'(d) is defined for even d >= 4");
  Integer odd_part = d;
  while (odd_part % 2 == 0) odd_part /= 2;
  Integer count = 0;
  for (Integer f = 1; f * f <= odd_part; ++f) {
    if (odd_part % f != 0) continue;
    const Integer g = odd_part / f;
    if (f >= 4) ++count;
    if (g != f && g >= 4) ++count;
  }
  return count;
}

LowerBound Q_lower_bound(Integer r, Integer d, const Catalog& catalog) {
  require(r >= 2 && d >= 4, "Q(r, d) is defined for r >= 2, d >= 4");
  LowerBound out;
  for (Integer k = 4; k <= d; ++k) {
    if (d % k != 0) continue;
    auto entries = catalog.realizable(r, k);
    if (entries.empty()) continue;
    ++out.count;
    out.divisibilities.push_back(k);
    for (auto& e : entries) out.entries.push_back(std::move(e));
  }
  return out;
}

UpperBound Q_upper_bound(Integer r, Integer d) {
  require(r >= 2 && d >= 4, "Q(r, d) is defined for r >= 2, d >= 4");
  UpperBound out{count_N(d), std::nullopt};
  // Spin simply-connected symplectic 4-manifolds have b2 = 2 mod 4, so
  // otherwise only odd divisibilities occur.
  if (d % 2 == 0 && checked::mod(r, Integer{4}) != 2) out.refined = count_N_prime(d);
  return out;
}

LevelRealization realize_level(const SymplecticFourManifoldDescriptor& m_desc, Integer multiple) {
  validate(m_desc);
  require(multiple >= 1, "the level multiple m must be positive");
  const Integer k = lattice::divisibility(m_desc.c1);
  if (k == 0) throw Error(ErrorCode::ZeroFunctional, "c1 = 0: no positive level is realizable");
  if (m_desc.b2 < 2) throw Error(ErrorCode::Precondition, "level realization needs b2 >= 2");

  const Integer n = m_desc.b2;
  CovectorZ K(n);
  for (Eigen::Index j = 0; j < n; ++j) K(j) = checked::neg(m_desc.c1(j)) / k;

  LevelRealization out;
  try {
    out.basis = lattice::complete_to_basis(K);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalConsistency, std::string("basis adaptation failed: ") + e.what());
  }
  // A covector c has coordinates c * B^T in the basis whose vectors are the
  // rows of B; inverting, c = c_adapted * (B^T)^{-1}.
  out.K_adapted = CovectorZ::Zero(n);
  out.K_adapted(0) = k;
  out.omega_adapted = CovectorZ::Zero(n);
  out.omega_adapted(0) = 1;
  out.omega_adapted(1) = multiple;
  const MatrixZ inv_t = out.basis.inverse.transpose();
  out.omega = CovectorZ::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) out.omega(j) = lattice::pairing<Integer>(out.omega_adapted, inv_t.col(j));

  out.level = lattice::quotient_divisibility(out.K_adapted, out.omega_adapted);
  const Integer recomputed = lattice::quotient_divisibility(m_desc.c1, out.omega);
  if (out.level != checked::mul(multiple, k) || recomputed != out.level) {
    throw Error(ErrorCode::InternalConsistency, "realized level " + std::to_string(out.level) +
                                                    " does not recompute to m*d(K)");
  }
  out.hypothesis_in_scope = m_desc.b2_plus > 1 || (m_desc.b2 == 10 && m_desc.b2_plus == 1);
  out.hypothesis = "assumed, not verified: M minimal with b2_plus > 1 (or a Dolgachev surface)";
  return out;
}

CountReport contact_count_report(Integer r, Integer d, const Catalog& catalog) {
  require(r >= 2 && d >= 4, "count reports need r >= 2, d >= 4");
  CountReport out;
  out.r = r;
  out.level = d;
  // Spin 5-manifolds carry even levels, non-spin ones odd levels.
  out.manifold_name = barden_name(r - 1, d % 2 == 0);
  auto lower = Q_lower_bound(r, d, catalog);
  const auto upper = Q_upper_bound(r, d);
  out.lower_bound = lower.count;
  out.upper_bound_N = upper.N;
  out.upper_bound_refined = upper.refined;
  const Integer tightest = upper.refined ? std::min(*upper.refined, upper.N) : upper.N;
  if (out.lower_bound > tightest) {
    throw Error(ErrorCode::InternalConsistency, "catalog lower bound exceeds the divisor upper bound");
  }
  out.exact = out.lower_bound == tightest;
  out.realized_divisibilities = std::move(lower.divisibilities);
  out.realizing_entries = std::move(lower.entries);
  return out;
}

}  // namespace bwc
