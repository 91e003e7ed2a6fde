#pragma once

// Piecewise-linear increasing bijections between rational intervals, stored as
// the canonical list of graph breakpoints.

#include "steinlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace steinlab {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Finite union of pairwise disjoint open intervals, sorted left to right.
class IntervalSet {
 public:
  using Interval = std::pair<Rational, Rational>;

  IntervalSet() = default;
  /// Validates sortedness, disjointness and nonemptiness.
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  /// (a, b) is a subset of the union.
  bool covers(const Rational& a, const Rational& b) const;
  /// The union is a subset of the closed interval [a, b].
  bool within(const Rational& a, const Rational& b) const;
  /// The union is a subset of `other`.
  bool subset_of(const IntervalSet& other) const;
  /// The union meets the open interval (a, b).
  bool meets(const Rational& a, const Rational& b) const;

  IntervalSet unite(const IntervalSet& other) const;

  std::string str() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// A PL increasing bijection [lo, hi] -> [range_lo, range_hi]. Elements of
/// the groups studied here are the endomorphisms: range equals domain and
/// both endpoints are fixed.
///
/// The breakpoint list always has strictly increasing coordinates and no
/// interior point with equal incoming and outgoing slopes, so two maps are
/// equal as functions iff their point lists are identical.
class PLMap {
 public:
  /// Validates and canonicalizes a breakpoint list whose first and last
  /// points lie on the diagonal. Throws DomainError with a diagnosis.
  static PLMap canonicalize(std::vector<Point> raw);
  /// Same, without the fixed-endpoint requirement.
  static PLMap bijection(std::vector<Point> raw);
  static PLMap identity(const Rational& lo, const Rational& hi);

  const std::vector<Point>& points() const { return points_; }
  const Rational& lo() const { return points_.front().x; }
  const Rational& hi() const { return points_.back().x; }
  const Rational& range_lo() const { return points_.front().y; }
  const Rational& range_hi() const { return points_.back().y; }
  bool is_endomorphism() const { return lo() == range_lo() && hi() == range_hi(); }
  bool is_identity() const { return points_.size() == 2 && is_endomorphism(); }

  std::size_t piece_count() const { return points_.size() - 1; }
  Rational slope(std::size_t piece) const;
  std::vector<Rational> slopes() const;
  Rational initial_slope() const { return slope(0); }
  Rational final_slope() const { return slope(piece_count() - 1); }

  /// f(x) for lo <= x <= hi.
  Rational evaluate(const Rational& x) const;
  /// f^{-1}(y) for range_lo <= y <= range_hi.
  Rational preimage(const Rational& y) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  explicit PLMap(std::vector<Point> pts) : points_(std::move(pts)) {}
  static PLMap build(std::vector<Point> raw, bool require_fixed_ends);

  std::vector<Point> points_;
};

/// x -> f(g(x)). Requires g's range to equal f's domain.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
/// h g h^{-1}.
PLMap conjugate(const PLMap& h, const PLMap& g);
/// f^n for any integer n.
PLMap power(const PLMap& f, long n);

/// Identity extension of an endomorphism to [new_lo, new_hi] ⊇ [lo, hi].
PLMap extend(const PLMap& f, const Rational& new_lo, const Rational& new_hi);
/// Restriction to [new_lo, new_hi] ⊆ [lo, hi]; the support must lie inside.
PLMap restrict(const PLMap& f, const Rational& new_lo, const Rational& new_hi);
/// Conjugate by the reflection x -> lo + hi - x.
PLMap mirror(const PLMap& f);

/// The open set {x : f(x) != x} of an endomorphism.
IntervalSet support(const PLMap& f);

/// Image of each interval under an increasing map (endpoints mapped exactly).
IntervalSet image(const PLMap& h, const IntervalSet& s);

}  // namespace steinlab
