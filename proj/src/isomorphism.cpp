#include "bwc/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bwc {

std::string_view to_string(Decision d) {
  return d == Decision::Isomorphic ? "isomorphic" : "not_isomorphic";
}

std::string_view to_string(DecisionCase c) {
  switch (c) {
    case DecisionCase::PositiveLevelSmallDivisibilities: return "positive_level_small_divisibilities";
    case DecisionCase::LevelZeroEqualDivisibilities: return "level_zero_equal_divisibilities";
    case DecisionCase::EqualLargeDivisibilities: return "equal_large_divisibilities";
    case DecisionCase::LevelZeroDivisibilitiesDiffer: return "level_zero_divisibilities_differ";
    case DecisionCase::LargeDivisibilitiesDiffer: return "large_divisibilities_differ";
    case DecisionCase::LevelsDiffer: return "levels_differ";
    case DecisionCase::ManifoldsDiffer: return "manifolds_differ";
  }
  return "unknown";
}

IsomorphismReport decide(Integer d, Integer dK, Integer dK_prime) {
  if (d < 0 || dK < 0 || dK_prime < 0 || !checked::divides(dK, d) || !checked::divides(dK_prime, d)) {
    throw Error(ErrorCode::InconsistentDivisibility,
                "d(K)=" + std::to_string(dK) + ", d(K')=" + std::to_string(dK_prime) +
                    " must both divide the level " + std::to_string(d));
  }
  IsomorphismReport r;
  r.level = d;
  r.dK = dK;
  r.dK_prime = dK_prime;

  if (d == 0) {
    if (dK == dK_prime) {
      r.decision = Decision::Isomorphic;
      r.decision_case = DecisionCase::LevelZeroEqualDivisibilities;
    } else {
      r.decision_case = DecisionCase::LevelZeroDivisibilitiesDiffer;
      // Lowest generator degree is -2 + 2 delta with delta = d(K) on level 0.
      r.distinguisher_lowest = std::pair{checked::add<Integer>(-2, checked::mul<Integer>(2, dK)),
                                         checked::add<Integer>(-2, checked::mul<Integer>(2, dK_prime))};
    }
    return r;
  }
  if (dK <= 3 && dK_prime <= 3) {
    r.decision = Decision::Isomorphic;
    r.decision_case = DecisionCase::PositiveLevelSmallDivisibilities;
    return r;
  }
  if (dK == dK_prime) {
    r.decision = Decision::Isomorphic;
    r.decision_case = DecisionCase::EqualLargeDivisibilities;
    return r;
  }
  // Here d >= 4, since one divisibility is >= 4 and divides d.
  r.decision_case = DecisionCase::LargeDivisibilitiesDiffer;
  const Integer smaller = std::min(dK, dK_prime);
  r.distinguisher_b = smaller <= 3 ? 2 : smaller - 1;
  return r;
}

namespace {

struct Entry {
  Integer degree;
  GeneratorIndex index;

  auto key() const { return std::tuple{degree, index.k, index.i}; }
};

std::map<Integer, std::vector<Entry>> by_residue(const DegreeSpectrum& s, Integer d, Integer k_max) {
  std::map<Integer, std::vector<Entry>> classes;
  for (const auto& q : s.q_degrees) {
    if (q.index.k > k_max) continue;
    classes[residue_class(q.degree, d)].push_back({q.degree, q.index});
  }
  for (auto& [b, v] : classes)
    std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.key() < y.key(); });
  return classes;
}

}  // namespace

IsomorphismReport build_witness(const DegreeSpectrum& source, const DegreeSpectrum& target, Integer k_max) {
  if (source.level != target.level) {
    throw Error(ErrorCode::Precondition, "spectra live on different levels");
  }
  if (source.a != target.a) throw Error(ErrorCode::Precondition, "spectra have different b2(M)");
  if (k_max < 1 || k_max > source.k_max || k_max > target.k_max) {
    throw Error(ErrorCode::Precondition, "k_max exceeds the truncation of a spectrum");
  }
  const Integer d = source.level;
  IsomorphismReport r = decide(d, source.dK(), target.dK());
  if (r.decision != Decision::Isomorphic) {
    throw Error(ErrorCode::NotIsomorphic, "no witness: the algebras are not isomorphic");
  }

  std::vector<WitnessTriple> triples;
  if (d == 0) {
    for (std::size_t n = 0; n < source.q_degrees.size(); ++n) {
      const auto& q = source.q_degrees[n];
      if (q.index.k > k_max) continue;
      const auto& qp = target.q_degrees.at(n);
      if (qp.index != q.index || qp.degree != q.degree) {
        throw Error(ErrorCode::InternalConsistency, "level-0 spectra with equal d(K) disagree in degree");
      }
      triples.push_back({q.index, 0, q.index});
    }
    r.witness = std::move(triples);
    return r;
  }

  const Integer two_d = 2 * d;
  const auto lhs = by_residue(source, d, k_max);
  const auto rhs = by_residue(target, d, k_max);
  // Every residue class needs representatives on both sides once k covers
  // a full period; below that bound one-sided classes are truncation effects.
  const bool complete = k_max >= two_d;
  for (Integer b = 0; b < d; ++b) {
    const auto li = lhs.find(b);
    const auto ri = rhs.find(b);
    const std::vector<Entry> none;
    const auto& left = li == lhs.end() ? none : li->second;
    const auto& right = ri == rhs.end() ? none : ri->second;
    if (complete && left.empty() != right.empty()) {
      throw Error(ErrorCode::InternalConsistency,
                  "residue class " + std::to_string(b) + " populated on one side only");
    }
    const std::size_t paired = std::min(left.size(), right.size());
    for (std::size_t n = 0; n < paired; ++n) {
      const Integer gap = right[n].degree - left[n].degree;
      if (gap % two_d != 0) throw Error(ErrorCode::InternalConsistency, "paired degrees differ mod 2d");
      triples.push_back({left[n].index, gap / two_d, right[n].index});
    }
    for (std::size_t n = paired; n < left.size(); ++n) r.deferred_source.push_back(left[n].index);
    for (std::size_t n = paired; n < right.size(); ++n) r.deferred_target.push_back(right[n].index);
  }
  std::sort(triples.begin(), triples.end(),
            [](const WitnessTriple& x, const WitnessTriple& y) { return x.source < y.source; });
  std::sort(r.deferred_source.begin(), r.deferred_source.end());
  std::sort(r.deferred_target.begin(), r.deferred_target.end());
  r.witness = std::move(triples);
  return r;
}

}  // namespace bwc
