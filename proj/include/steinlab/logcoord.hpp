#pragma once

// Exact elements r + u ln2 + v ln3 of the rational span of {1, ln 2, ln 3}.

#include "steinlab/rational.hpp"

#include <optional>
#include <string>

namespace steinlab {

struct LogCoord {
  Rational r;  // coefficient of 1
  Rational u;  // coefficient of ln 2
  Rational v;  // coefficient of ln 3

  static LogCoord constant(const Rational& c) { return {c, 0, 0}; }
  static LogCoord log2() { return {0, 1, 0}; }
  static LogCoord log3() { return {0, 0, 1}; }

  /// 1, ln 2 and ln 3 are linearly independent over Q.
  bool is_zero() const { return r.is_zero() && u.is_zero() && v.is_zero(); }
  bool is_rational() const { return u.is_zero() && v.is_zero(); }

  /// Human readable form such as "1+ln2-3/2*ln3" or "0".
  std::string str() const;

  LogCoord operator-() const { return {-r, -u, -v}; }
  LogCoord& operator+=(const LogCoord& o);
  LogCoord& operator-=(const LogCoord& o);
  LogCoord& operator*=(const Rational& c);
  friend LogCoord operator+(LogCoord a, const LogCoord& b) { return a += b; }
  friend LogCoord operator-(LogCoord a, const LogCoord& b) { return a -= b; }
  friend LogCoord operator*(LogCoord a, const Rational& c) { return a *= c; }
  friend LogCoord operator*(const Rational& c, LogCoord a) { return a *= c; }
  friend bool operator==(const LogCoord&, const LogCoord&) = default;
};

/// Initial interval precision for logcoord_sign: $STEINLAB_PRECISION_BITS,
/// default 64.
int default_precision_bits();

/// Exact sign (-1, 0, +1) of b ln2 - a ln3, by comparing 2^{b+} 3^{a-}
/// against 2^{b-} 3^{a+}.
int cmp_b_ln2_minus_a_ln3(const BigInt& a, const BigInt& b);

/// Exact sign of x. Pure logarithmic values reduce to an integer power
/// comparison; mixed values use interval refinement starting at
/// `initial_bits` and doubling until the interval excludes zero.
int logcoord_sign(const LogCoord& x, int initial_bits = default_precision_bits());

/// c with x == c * y, when x and y are proportional over Q.
/// Throws DomainError if y is zero.
std::optional<Rational> rational_ratio(const LogCoord& x, const LogCoord& y);

}  // namespace steinlab
