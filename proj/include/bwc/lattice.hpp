#pragma once

/**
 * Exact linear algebra over the integers.
 *
 * Classes of a free abelian group Z^n are column vectors, integer
 * functionals on it (cohomology classes evaluated on a basis) are row
 * vectors, so `c * x` is the pairing. All arithmetic is overflow-checked;
 * Eigen's own operators are only used where no integer arithmetic happens.
 */

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "bwc/checked.hpp"
#include "bwc/error.hpp"

namespace bwc {

template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Covector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Integer = std::int64_t;
using VectorZ = IntVector<Integer>;
using CovectorZ = Covector<Integer>;
using MatrixZ = IntMatrix<Integer>;

/// Unimodular change of basis. Row j of `matrix` is the j-th new basis
/// vector written in the old basis; `matrix * inverse` is the identity.
template <typename Scalar>
struct AdaptedBasis {
  IntMatrix<Scalar> matrix;
  IntMatrix<Scalar> inverse;

  Eigen::Index rank() const { return matrix.rows(); }
  IntVector<Scalar> vector(Eigen::Index j) const { return matrix.row(j).transpose(); }
};

namespace lattice {

template <std::signed_integral Scalar, typename DerivedA, typename DerivedB>
Scalar pairing(const Eigen::MatrixBase<DerivedA>& c, const Eigen::MatrixBase<DerivedB>& x) {
  if (c.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "pairing of length " + std::to_string(c.size()) + " with length " +
                    std::to_string(x.size()));
  }
  Scalar acc = 0;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    acc = checked::add<Scalar>(acc, checked::mul<Scalar>(c(j), x(j)));
  }
  return acc;
}

/// Value of the covector on a class.
template <std::signed_integral Scalar>
Scalar evaluate(const Covector<Scalar>& c, const IntVector<Scalar>& x) {
  return pairing<Scalar>(c, x);
}

/// gcd of all entries; 0 exactly for the zero covector.
template <typename Derived>
typename Derived::Scalar divisibility(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  Scalar g = 0;
  for (Eigen::Index j = 0; j < c.size(); ++j) g = checked::gcd<Scalar>(g, c(j));
  return g;
}

template <typename Derived>
bool is_indivisible(const Eigen::MatrixBase<Derived>& c) {
  return divisibility(c) == 1;
}

namespace detail {

template <typename Block>
void negate(Block&& b) {
  for (Eigen::Index r = 0; r < b.rows(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c) b(r, c) = checked::neg(b(r, c));
}

/// Column reduction of a nonzero functional. Produces a unimodular U
/// (columns are the new basis of the lattice) and W = U^{-1} such that
/// alpha * U = (g, 0, ..., 0) with g = divisibility(alpha). Columns 1..n-1
/// of U are therefore a basis of ker(alpha), normalized so their first
/// nonzero coordinate is positive.
template <std::signed_integral Scalar>
void reduce(const Covector<Scalar>& alpha, IntMatrix<Scalar>& U, IntMatrix<Scalar>& W) {
  const Eigen::Index n = alpha.size();
  Covector<Scalar> v = alpha;
  U = IntMatrix<Scalar>::Identity(n, n);
  W = IntMatrix<Scalar>::Identity(n, n);

  for (Eigen::Index j = 1; j < n; ++j) {
    const Scalar a = v(0);
    const Scalar b = v(j);
    if (b == 0) continue;
    if (a == 0) {
      U.col(0).swap(U.col(j));
      W.row(0).swap(W.row(j));
      std::swap(v(0), v(j));
      continue;
    }
    const auto [g, x, y] = checked::xgcd<Scalar>(a, b);
    const Scalar ag = a / g;
    const Scalar bg = b / g;
    // Column op [col0 colj] <- [col0 colj] * [[x, -bg], [y, ag]] (det 1).
    for (Eigen::Index r = 0; r < n; ++r) {
      const Scalar u0 = U(r, 0);
      const Scalar uj = U(r, j);
      U(r, 0) = checked::mul_add<Scalar>(x, u0, y, uj);
      U(r, j) = checked::mul_add<Scalar>(checked::neg(bg), u0, ag, uj);
    }
    // Inverse row op with [[ag, bg], [-y, x]].
    for (Eigen::Index c = 0; c < n; ++c) {
      const Scalar w0 = W(0, c);
      const Scalar wj = W(j, c);
      W(0, c) = checked::mul_add<Scalar>(ag, w0, bg, wj);
      W(j, c) = checked::mul_add<Scalar>(checked::neg(y), w0, x, wj);
    }
    v(0) = g;
    v(j) = 0;
  }
  if (v(0) < 0) {
    negate(U.col(0));
    negate(W.row(0));
  }
  for (Eigen::Index j = 1; j < n; ++j) {
    Eigen::Index lead = 0;
    while (lead < n && U(lead, j) == 0) ++lead;
    if (lead < n && U(lead, j) < 0) {
      negate(U.col(j));
      negate(W.row(j));
    }
  }
}

template <std::signed_integral Scalar>
void require_nonempty(const Covector<Scalar>& c, const char* what) {
  if (c.size() < 1) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has rank 0");
}

}  // namespace detail

/// Basis e_1..e_n with alpha(e_1) = 1 and alpha(e_i) = 0 for i > 1.
template <std::signed_integral Scalar>
AdaptedBasis<Scalar> complete_to_basis(const Covector<Scalar>& alpha) {
  detail::require_nonempty(alpha, "functional");
  if (divisibility(alpha) != 1) {
    throw Error(ErrorCode::NotIndivisible, "functional not indivisible");
  }
  IntMatrix<Scalar> U, W;
  detail::reduce(alpha, U, W);
  return {U.transpose(), W.transpose()};
}

/// Basis of the sublattice {x : alpha * x = 0}; n-1 vectors.
template <std::signed_integral Scalar>
std::vector<IntVector<Scalar>> kernel_basis(const Covector<Scalar>& alpha) {
  detail::require_nonempty(alpha, "functional");
  if (divisibility(alpha) == 0) throw Error(ErrorCode::ZeroFunctional, "kernel of the zero functional");
  IntMatrix<Scalar> U, W;
  detail::reduce(alpha, U, W);
  std::vector<IntVector<Scalar>> out;
  out.reserve(static_cast<std::size_t>(alpha.size() - 1));
  for (Eigen::Index j = 1; j < alpha.size(); ++j) out.emplace_back(U.col(j));
  return out;
}

/// Some x with w * x = 1.
template <std::signed_integral Scalar>
IntVector<Scalar> solve_unit(const Covector<Scalar>& w) {
  detail::require_nonempty(w, "functional");
  if (divisibility(w) != 1) throw Error(ErrorCode::NotIndivisible, "no class evaluates to 1");
  IntMatrix<Scalar> U, W;
  detail::reduce(w, U, W);
  return U.col(0);
}

/// Divisibility of c restricted to ker(w), i.e. the gcd of c on a kernel basis.
template <std::signed_integral Scalar>
Scalar kernel_restriction_divisibility(const Covector<Scalar>& c, const Covector<Scalar>& w) {
  Scalar g = 0;
  for (const auto& v : kernel_basis(w)) g = checked::gcd<Scalar>(g, evaluate(c, v));
  return g;
}

/// gcd of the 2x2 minors of the matrix with rows c and w. For w primitive this
/// is the content of c modulo Z*w (the second determinantal divisor).
template <std::signed_integral Scalar>
Scalar minor_divisibility(const Covector<Scalar>& c, const Covector<Scalar>& w) {
  Scalar g = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    for (Eigen::Index j = i + 1; j < c.size(); ++j) {
      const Scalar m = checked::sub<Scalar>(checked::mul<Scalar>(c(i), w(j)), checked::mul<Scalar>(c(j), w(i)));
      g = checked::gcd<Scalar>(g, m);
    }
  }
  return g;
}

/// Divisibility of the image of c in the free group (functionals)/Z*w.
/// Computed twice, through the kernel of w and through the 2x2 minors; a
/// disagreement is a bug and throws.
template <std::signed_integral Scalar>
Scalar quotient_divisibility(const Covector<Scalar>& c, const Covector<Scalar>& w) {
  detail::require_nonempty(w, "functional");
  if (c.size() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch, "quotient of covectors with different ranks");
  }
  if (divisibility(w) != 1) throw Error(ErrorCode::NotIndivisible, "quotient by a divisible class");
  if (w.size() == 1) return 0;
  const Scalar via_kernel = kernel_restriction_divisibility(c, w);
  const Scalar via_minors = minor_divisibility(c, w);
  if (via_kernel != via_minors) {
    throw Error(ErrorCode::InternalConsistency,
                "quotient divisibility routes disagree: " + std::to_string(via_kernel) + " vs " +
                    std::to_string(via_minors));
  }
  return via_kernel;
}

}  // namespace lattice
}  // namespace bwc
