#include "bwc/algebra.hpp"

#include <string>

namespace bwc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Precondition, what);
}

void require_residue_args(Integer d, Integer dK) {
  require(d >= 1, "residue classes need level d >= 1");
  require(dK >= 1, "residue classes need d(K) >= 1");
  require(d % dK == 0, "d(K) must divide the level");
}

}  // namespace

Integer DegreeSpectrum::dK() const { return checked::gcd(delta, level); }

Integer deg_delta_i(Integer i, Integer b2M) {
  if (b2M < 1 || i < 0 || i > b2M + 1) {
    throw Error(ErrorCode::IndexOutOfRange, "generator index i=" + std::to_string(i) + " outside [0, " +
                                                std::to_string(b2M + 1) + "]");
  }
  if (i == 0) return 0;
  if (i == b2M + 1) return 4;
  return 2;
}

Integer deg_q(Integer k, Integer i, Integer delta, Integer b2M) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "generator index k must be positive");
  const Integer base = deg_delta_i(i, b2M) - 2;
  return checked::add(base, checked::mul(Integer{2}, checked::mul(delta, k)));
}

ResidueStatus qb_status(Integer b, Integer d, Integer dK) {
  require_residue_args(d, dK);
  require(b >= 0 && b < d, "residue class b must lie in [0, d)");
  const bool hit = (b - 1) % dK == 0 || b % dK == 0 || (b + 1) % dK == 0;
  return hit ? ResidueStatus::Infinite : ResidueStatus::Empty;
}

Integer residue_class(Integer degree, Integer d) {
  return checked::mod(degree, checked::mul(Integer{2}, d)) / 2;
}

std::vector<GeneratorIndex> qb_members_bruteforce(Integer b, Integer d, Integer delta, Integer b2M,
                                                  Integer k_max) {
  require(d >= 1, "residue classes need level d >= 1");
  require(b >= 0 && b < d, "residue class b must lie in [0, d)");
  require(k_max >= 1, "k_max must be positive");
  const Integer two_d = checked::mul(Integer{2}, d);
  std::vector<GeneratorIndex> out;
  for (Integer k = 1; k <= k_max; ++k) {
    for (Integer i = 0; i <= b2M + 1; ++i) {
      if (checked::mod(deg_q(k, i, delta, b2M) - 2 * b, two_d) == 0) out.push_back({k, i});
    }
  }
  return out;
}

ResidueClassTable residue_table(Integer d, Integer dK) {
  require_residue_args(d, dK);
  ResidueClassTable t{d, dK, {}};
  t.status.reserve(static_cast<std::size_t>(d));
  for (Integer b = 0; b < d; ++b) t.status.push_back(qb_status(b, d, dK));
  return t;
}

DegreeSpectrum spectrum(const FiveManifoldContact& x, Integer b2M, Integer k_max) {
  require(k_max >= 1, "k_max must be positive");
  require(b2M == x.b2_X + 1, "b2(M) must equal b2(X) + 1");
  DegreeSpectrum s;
  s.level = x.level;
  s.delta = x.delta;
  s.a = b2M + 1;
  s.k_max = k_max;
  s.q_degrees.reserve(static_cast<std::size_t>(k_max * (s.a + 1)));
  for (Integer k = 1; k <= k_max; ++k)
    for (Integer i = 0; i <= s.a; ++i) s.q_degrees.push_back({{k, i}, deg_q(k, i, x.delta, b2M)});
  // Basis of H_2(X) with c1(B_1) = level and c1(B_n) = 0 otherwise.
  s.z_degrees.assign(static_cast<std::size_t>(b2M - 1), 0);
  if (!s.z_degrees.empty()) s.z_degrees.front() = checked::mul(Integer{-2}, x.level);
  if (x.level >= 1) s.residues = residue_table(x.level, x.dK);
  return s;
}

}  // namespace bwc
