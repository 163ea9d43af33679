#pragma once

// Overflow-checked integer arithmetic. Every operation throws
// Error(ErrorCode::Overflow) instead of wrapping.

#include <concepts>
#include <limits>
#include <string>

#include "bwc/error.hpp"

namespace bwc::checked {

template <std::signed_integral T>
[[noreturn]] inline void overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("integer overflow in ") + op);
}

template <std::signed_integral T>
constexpr T add(T a, T b) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) overflow<T>("add");
  return r;
}

template <std::signed_integral T>
constexpr T sub(T a, T b) {
  T r{};
  if (__builtin_sub_overflow(a, b, &r)) overflow<T>("sub");
  return r;
}

template <std::signed_integral T>
constexpr T mul(T a, T b) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) overflow<T>("mul");
  return r;
}

template <std::signed_integral T>
constexpr T neg(T a) {
  if (a == std::numeric_limits<T>::min()) overflow<T>("neg");
  return -a;
}

template <std::signed_integral T>
constexpr T abs(T a) {
  return a < 0 ? neg(a) : a;
}

/// a*x + b*y
template <std::signed_integral T>
constexpr T mul_add(T a, T x, T b, T y) {
  return add(mul(a, x), mul(b, y));
}

/// Nonnegative gcd; gcd(0, 0) = 0.
template <std::signed_integral T>
constexpr T gcd(T a, T b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor-style residue in [0, m) for m > 0.
template <std::signed_integral T>
constexpr T mod(T a, T m) {
  T r = a % m;
  return r < 0 ? r + m : r;
}

/// `d` divides `x`, with 0 dividing only 0.
template <std::signed_integral T>
constexpr bool divides(T d, T x) {
  if (d == 0) return x == 0;
  if (d == -1) return true;
  return x % d == 0;
}

template <std::signed_integral T>
struct Bezout {
  T gcd;
  T x;
  T y;
};

/// Extended Euclid: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
template <std::signed_integral T>
constexpr Bezout<T> xgcd(T a, T b) {
  T old_r = a, r = b;
  T old_s = 1, s = 0;
  T old_t = 0, t = 1;
  while (r != 0) {
    T q = old_r / r;
    T nr = sub(old_r, mul(q, r));
    old_r = r;
    r = nr;
    T ns = sub(old_s, mul(q, s));
    old_s = s;
    s = ns;
    T nt = sub(old_t, mul(q, t));
    old_t = t;
    t = nt;
  }
  if (old_r < 0) return {neg(old_r), neg(old_s), neg(old_t)};
  return {old_r, old_s, old_t};
}

}  // namespace bwc::checked
