#pragma once

// Exact rational numbers and prime-exponent factorizations.
//
// Rational wraps GMP's mpq_class and keeps it canonical at all times
// (reduced, positive denominator), so structural equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace steinlab {

using BigInt = mpz_class;

/// A precondition or domain rule was violated (CLI exit code 1).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text could not be parsed (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long n, long d);
  Rational(const BigInt& n) : value_(n) {}  // NOLINT
  Rational(const BigInt& n, const BigInt& d);
  explicit Rational(mpq_class q);

  /// Parses "num" or "num/den" with an optional sign. Rejects zero denominators.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "num/den", or "num" when the denominator is 1.
  std::string str() const;

  Rational abs() const;
  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// a^e for integer e (a must be nonzero when e < 0).
Rational pow(const Rational& a, long e);

/// Integer power 2^p 3^q as an exact rational.
Rational pow23(long p, long q);

std::string to_string(const BigInt& n);

/// Prime -> nonzero exponent. The empty map represents 1.
using PrimeExpVec = std::map<BigInt, long>;

/// Factorization of a positive rational into prime powers.
PrimeExpVec factor_rational(const Rational& q);

/// Distinct primes dividing n (n > 0).
std::vector<BigInt> prime_divisors(const BigInt& n);

/// Product of p^e over the entries.
Rational multiply_out(const PrimeExpVec& v);

/// True iff every prime in x's denominator divides the product of `slopes`.
bool in_break_module(const Rational& x, const std::vector<long>& slopes);

/// Integer exponents (e_1..e_s) with prod slopes[i]^e_i == q, when q lies in
/// the multiplicative group generated by `slopes`.
std::optional<std::vector<long>> in_slope_group(const Rational& q,
                                                const std::vector<long>& slopes);

/// Greatest common divisor of a set of rationals: the positive generator of
/// the additive subgroup they span. Zero for an empty or all-zero input.
Rational rational_gcd(const std::vector<Rational>& values);

}  // namespace steinlab
