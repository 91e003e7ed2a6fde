#pragma once

// Test-only oracles. Nothing here calls the code paths it is used to check.

#include "steinlab/plmap.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using steinlab::Point;
using steinlab::Rational;

/// Sign of r + u ln2 + v ln3 evaluated once at 200 bits, round to nearest.
inline int float200_sign(const Rational& r, const Rational& u, const Rational& v) {
  mpfr_t acc, term, l2, l3, three;
  for (auto* x : {&acc, &term, &l2, &l3, &three}) mpfr_init2(*x, 200);
  mpfr_const_log2(l2, MPFR_RNDN);
  mpfr_set_ui(three, 3, MPFR_RNDN);
  mpfr_log(l3, three, MPFR_RNDN);
  mpfr_set_q(acc, r.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_mul_q(term, l2, u.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, term, MPFR_RNDN);
  mpfr_mul_q(term, l3, v.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, term, MPFR_RNDN);
  const int s = mpfr_sgn(acc);
  for (auto* x : {&acc, &term, &l2, &l3, &three}) mpfr_clear(*x);
  return s;
}

/// Value of r + u ln2 + v ln3 as a double (for coarse comparisons only).
inline double approx(const Rational& r, const Rational& u, const Rational& v) {
  return r.raw().get_d() + u.raw().get_d() * 0.69314718055994530942 +
         v.raw().get_d() * 1.09861228866810969140;
}

/// Random rational in (0, 1) with denominator `den`.
inline Rational random_unit(std::mt19937_64& rng, long den) {
  return Rational(1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den - 1)), den);
}

/// Random increasing PL map of [0,1] fixing the endpoints, with up to
/// `max_inner` interior breakpoints. Not canonicalized.
inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t max_inner = 4) {
  const std::size_t k = rng() % (max_inner + 1);
  std::set<Rational> xs, ys;
  while (xs.size() < k) xs.insert(random_unit(rng, 48));
  while (ys.size() < k) ys.insert(random_unit(rng, 48));
  std::vector<Point> pts{{0, 0}};
  auto xi = xs.begin();
  auto yi = ys.begin();
  for (; xi != xs.end(); ++xi, ++yi) pts.push_back({*xi, *yi});
  pts.push_back({1, 1});
  return pts;
}

/// Pointwise evaluation by scanning segments, independent of PLMap::evaluate.
inline Rational eval_scan(const std::vector<Point>& pts, const Rational& x) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].x <= x && x <= pts[i + 1].x) {
      return pts[i].y + (x - pts[i].x) * (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
    }
  }
  throw std::out_of_range("eval_scan");
}

/// Dense probe grid of multiples of 1/den inside [lo, hi].
inline std::vector<Rational> grid(const Rational& lo, const Rational& hi, long den) {
  std::vector<Rational> out;
  for (long k = 0;; ++k) {
    Rational x = lo + Rational(k, den) * (hi - lo);
    if (x > hi) break;
    out.push_back(x);
  }
  return out;
}

}  // namespace oracle
