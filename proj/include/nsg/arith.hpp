#ifndef NSG_ARITH_HPP
#define NSG_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

// Semigroup elements and bound values. Signed so that differences such as
// i - q*lambda can be queried for membership directly; every product and sum
// that can grow goes through the checked helpers below.
using Int = std::int64_t;

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in " +
                                         std::to_string(a) + " * " +
                                         std::to_string(b));
  }
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in " +
                                         std::to_string(a) + " + " +
                                         std::to_string(b));
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in " +
                                         std::to_string(a) + " - " +
                                         std::to_string(b));
  }
  return r;
}

/// Canonical residue in [0, m-1], also for negative x. Requires m > 0.
constexpr Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

/// floor(x / y) for y > 0 and any sign of x.
constexpr Int floor_div(Int x, Int y) {
  Int q = x / y;
  return (x % y != 0 && x < 0) ? q - 1 : q;
}

/// ceil(x / y) for y > 0 and any sign of x; equals floor((x + y - 1) / y)
/// without forming x + y - 1.
constexpr Int ceil_div(Int x, Int y) {
  Int q = x / y;
  return (x % y != 0 && x > 0) ? q + 1 : q;
}

struct ExtendedGcd {
  Int gcd;
  Int x;  // gcd == a*x + b*y
  Int y;
};

constexpr ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

/// Inverse of b modulo m in [0, m-1]; m >= 1 and gcd(b, m) == 1.
inline Int mod_inverse(Int b, Int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  const auto eg = extended_gcd(mod(b, m), m);
  if (eg.gcd != 1) {
    throw Error(ErrorKind::NonCoprimeGenerators,
                std::to_string(b) + " is not invertible modulo " +
                    std::to_string(m));
  }
  return mod(eg.x, m);
}

/// floor(sqrt(n)) for n >= 0, exact.
constexpr Int isqrt(Int n) {
  if (n < 2) return n < 0 ? 0 : n;
  // Newton iteration from above converges monotonically to the floor.
  std::uint64_t x = static_cast<std::uint64_t>(n);
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + static_cast<std::uint64_t>(n) / x) / 2;
  }
  return static_cast<Int>(x);
}

}  // namespace nsg

#endif  // NSG_ARITH_HPP
