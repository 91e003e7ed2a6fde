#pragma once

// Explicit elements of F_{2,3} with prescribed endpoint slopes and supports.

#include "steinlab/plmap.hpp"

#include <array>
#include <optional>

namespace steinlab {

/// Shape of a special element: support (0, support_cap) and descent slope.
struct BuilderConfig {
  Rational support_cap = Rational(3, 4);
  Rational shrink_slope = Rational(1, 2);

  /// Throws DomainError unless the cap lies in (0,1) ∩ Z[1/6] and the
  /// shrink slope is 1/2 or 1/3.
  void validate() const;
};

/// Default support cap for a requested lower bound r: 3/4 when r < 3/4,
/// else the first number k/6^n (n = 1, 2, ...) above r that stays below 1.
Rational default_support_cap(const Rational& r);

/// Element f of F_{2,3} with initial slope 2^p 3^q, final slope 1 and
/// support exactly (0, cap) ⊇ (0, r). f(x) > x on the support iff 2^p 3^q > 1.
PLMap special_element(long p, long q, const Rational& r,
                      std::optional<BuilderConfig> config = std::nullopt);

/// Mirror image: final slope 2^p 3^q, initial slope 1, support (1 - cap, 1)
/// ⊇ (1 - r, 1).
PLMap special_element_right(long p, long q, const Rational& r,
                            std::optional<BuilderConfig> config = std::nullopt);

/// The two-piece map of [-1,1] with breakpoints (-1,-1), (0,1/2), (1,1);
/// it carries [0,1] onto [1/2,1].
PLMap conjugator_half();

/// Moves an element of F_{2,3}[0,1] into F_{2,3}[1/2,1] (viewed inside
/// F_{2,3}[0,1]) by conjugating with conjugator_half().
PLMap transport_to_upper_half(const PLMap& g);

/// Stable letter t for the left-based discrete character a chi_0^2 + b chi_0^3
/// (gcd(a, b) = 1): chi(t) = 0, lambda(t) < 0, (0, 3/4) ⊆ Supp(t).
PLMap stable_letter(long a, long b);

/// PL homeomorphism [0, from] -> [0, to] with breaks in Z[1/6] and slopes
/// in <2, 3>.
PLMap connect(const Rational& from, const Rational& to);

/// Left special elements for (1,0), (0,1) and right special elements for
/// (1,0), (0,1); their abelianization matrix is the identity.
std::array<PLMap, 4> witness_basis();

}  // namespace steinlab
