#include "steinlab/builders.hpp"

#include "steinlab/logcoord.hpp"

#include <numeric>

namespace steinlab {

namespace {

const std::vector<long> kSlopes23{2, 3};

void require_unit_interval(const Rational& r, const char* op) {
  if (r <= Rational(0) || r >= Rational(1)) {
    throw DomainError(std::string(op) + ": r = " + r.str() + " outside (0,1)");
  }
}

}  // namespace

void BuilderConfig::validate() const {
  if (support_cap <= Rational(0) || support_cap >= Rational(1) ||
      !in_break_module(support_cap, kSlopes23)) {
    throw DomainError("support cap " + support_cap.str() + " not in (0,1) ∩ Z[1/6]");
  }
  if (shrink_slope != Rational(1, 2) && shrink_slope != Rational(1, 3)) {
    throw DomainError("shrink slope " + shrink_slope.str() + " must be 1/2 or 1/3");
  }
}

Rational default_support_cap(const Rational& r) {
  require_unit_interval(r, "default_support_cap");
  if (r < Rational(3, 4)) return Rational(3, 4);
  BigInt scale = 6;
  for (;;) {
    BigInt fl;
    const mpq_class scaled = r.raw() * scale;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const Rational c(fl + 1, scale);
    if (c < Rational(1)) return c;
    scale *= 6;
  }
}

PLMap special_element(long p, long q, const Rational& r, std::optional<BuilderConfig> config) {
  if (p == 0 && q == 0) {
    throw DomainError("special_element: (p,q) = (0,0) has initial slope 1 and cannot move (0,r)");
  }
  require_unit_interval(r, "special_element");
  const BuilderConfig cfg = config.value_or(BuilderConfig{default_support_cap(r), Rational(1, 2)});
  cfg.validate();
  const Rational& c = cfg.support_cap;
  const Rational& m = cfg.shrink_slope;
  if (c <= r) throw DomainError("special_element: support cap " + c.str() + " <= r = " + r.str());

  const Rational sigma = pow23(p, q);
  if (sigma < Rational(1)) {
    return invert(special_element(-p, -q, r, cfg));
  }
  // Pieces: slope sigma on [0,a], slope 1 on [a,b], slope m on [b,c].
  // f(c) = c forces c - b = (sigma - 1) a / (1 - m); b >= a needs
  // a <= c (1 - m) / (sigma - m).
  const Rational bound = c * (Rational(1) - m) / (sigma - m);
  Rational a = c / 6;
  while (a > bound) a /= 6;
  const Rational b = c - (sigma - Rational(1)) * a / (Rational(1) - m);
  std::vector<Point> pts{{0, 0}, {a, sigma * a}};
  if (b > a) pts.push_back({b, b + (sigma - Rational(1)) * a});
  pts.push_back({c, c});
  pts.push_back({1, 1});
  return PLMap::canonicalize(std::move(pts));
}

PLMap special_element_right(long p, long q, const Rational& r,
                            std::optional<BuilderConfig> config) {
  return mirror(special_element(p, q, r, config));
}

PLMap conjugator_half() {
  return PLMap::canonicalize({{-1, -1}, {0, Rational(1, 2)}, {1, 1}});
}

PLMap transport_to_upper_half(const PLMap& g) {
  if (g.lo() != Rational(0) || g.hi() != Rational(1)) {
    throw DomainError("transport_to_upper_half: element must act on [0,1]");
  }
  const PLMap moved = conjugate(conjugator_half(), extend(g, -1, 1));
  return restrict(moved, 0, 1);
}

PLMap stable_letter(long a, long b) {
  if (a == 0 && b == 0) throw DomainError("stable_letter: (a,b) = (0,0)");
  if (std::gcd(a, b) != 1) {
    throw DomainError("stable_letter: gcd(" + std::to_string(a) + "," + std::to_string(b) +
                      ") != 1");
  }
  long p = b;
  long q = -a;
  if (cmp_b_ln2_minus_a_ln3(BigInt(a), BigInt(b)) > 0) {
    p = -b;
    q = a;
  }
  return special_element(p, q, Rational(3, 4), BuilderConfig{Rational(5, 6), Rational(1, 2)});
}

PLMap connect(const Rational& from, const Rational& to) {
  for (const Rational* x : {&from, &to}) {
    if (x->sign() <= 0 || !in_break_module(*x, kSlopes23)) {
      throw DomainError("connect: endpoint " + x->str() + " is not a positive element of Z[1/6]");
    }
  }
  if (to < from) return invert(connect(to, from));
  if (to == from) return PLMap::identity(0, from);
  if (to <= from * 2) {
    // Slope 2 on [0, to - from], slope 1 after.
    const Rational d = to - from;
    std::vector<Point> pts{{0, 0}, {d, d * 2}};
    if (d < from) pts.push_back({from, to});
    return PLMap::bijection(std::move(pts));
  }
  const PLMap doubling = PLMap::bijection({{0, 0}, {from, from * 2}});
  return compose(connect(from * 2, to), doubling);
}

std::array<PLMap, 4> witness_basis() {
  const Rational r(1, 2);
  return {special_element(1, 0, r), special_element(0, 1, r), special_element_right(1, 0, r),
          special_element_right(0, 1, r)};
}

}  // namespace steinlab
