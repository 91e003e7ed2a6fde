#pragma once

// Membership in Bieri–Strebel style groups of PL homeomorphisms and the
// characters of the Stein group F_{2,3}.

#include "steinlab/logcoord.hpp"
#include "steinlab/plmap.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steinlab {

/// PL homeomorphisms of [lo, hi] with slopes in the multiplicative group
/// generated by `slopes` and breakpoints in Z[1/prod(slopes)].
class GroupSpec {
 public:
  GroupSpec(std::vector<long> slopes, Rational lo, Rational hi);

  static GroupSpec thompson_f() { return GroupSpec({2}, 0, 1); }
  static GroupSpec f_n(long n) { return GroupSpec({n}, 0, 1); }
  static GroupSpec f23() { return GroupSpec({2, 3}, 0, 1); }
  static GroupSpec f23_on(const Rational& lo, const Rational& hi) {
    return GroupSpec({2, 3}, lo, hi);
  }
  static GroupSpec f_s_r(std::vector<long> slopes, const Rational& r) {
    return GroupSpec(std::move(slopes), 0, r);
  }

  const std::vector<long>& slopes() const { return slopes_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  /// Distinct primes of prod(slopes).
  std::vector<BigInt> break_primes() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<long> slopes_;
  Rational lo_;
  Rational hi_;
};

struct Membership {
  bool member = false;
  /// Empty for members; otherwise names the first offending breakpoint or slope.
  std::string diagnosis;
  explicit operator bool() const { return member; }
};

/// Throws DomainError when f's interval differs from the spec's.
Membership is_member(const PLMap& f, const GroupSpec& spec);

/// Values (chi_0^2, chi_0^3, chi_1^2, chi_1^3) of an element of F_{2,3}.
struct AbVector {
  std::array<std::int64_t, 4> m{};

  AbVector& operator+=(const AbVector& o);
  AbVector operator-() const;
  friend AbVector operator+(AbVector a, const AbVector& b) { return a += b; }
  friend AbVector operator-(AbVector a, const AbVector& b) { return a += -b; }
  friend bool operator==(const AbVector&, const AbVector&) = default;
};

/// Exponents (p, q) with slope == 2^p 3^q; throws DomainError otherwise.
std::pair<std::int64_t, std::int64_t> exponents23(const Rational& slope);

/// Endpoint slope exponents of f in F_{2,3}[lo, hi].
AbVector chi_endpoints(const PLMap& f);

/// (lambda(f), rho(f)): logarithms of the endpoint derivatives.
std::pair<LogCoord, LogCoord> lambda_rho(const PLMap& f);

/// Abelianization coordinates; defined only on F_{2,3} = F_{2,3}[0,1].
AbVector ab(const PLMap& f);

/// q1 chi_0^2 + q2 chi_0^3 + q3 chi_1^2 + q4 chi_1^3 + s lambda + t rho.
struct Character {
  std::array<Rational, 4> q{};
  Rational s;
  Rational t;

  static Character chi02() { return {{1, 0, 0, 0}, 0, 0}; }
  static Character chi03() { return {{0, 1, 0, 0}, 0, 0}; }
  static Character chi12() { return {{0, 0, 1, 0}, 0, 0}; }
  static Character chi13() { return {{0, 0, 0, 1}, 0, 0}; }
  static Character lambda() { return {{0, 0, 0, 0}, 1, 0}; }
  static Character rho() { return {{0, 0, 0, 0}, 0, 1}; }

  bool is_zero() const;
  std::string str() const;

  Character& operator+=(const Character& o);
  Character& operator*=(const Rational& c);
  Character operator-() const;
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a += -b; }
  friend Character operator*(const Rational& c, Character a) { return a *= c; }
  friend Character operator*(Character a, const Rational& c) { return a *= c; }
  friend bool operator==(const Character&, const Character&) = default;
};

/// chi evaluated on an element with abelianization m.
LogCoord char_eval(const Character& chi, const AbVector& m);
LogCoord char_eval(const Character& chi, const PLMap& f);

/// Unique split into a left-based part (q1, q2, s) and a right-based part
/// (q3, q4, t).
std::pair<Character, Character> decompose_LR(const Character& chi);

/// Values of chi on elements with abelianization e1..e4. These generate the
/// image of chi since ab is onto Z^4.
std::array<LogCoord, 4> image_generators(const Character& chi);

/// Positive generator of the image of chi when that image is cyclic.
/// Throws DomainError for the zero character.
std::optional<LogCoord> is_discrete(const Character& chi);

}  // namespace steinlab
