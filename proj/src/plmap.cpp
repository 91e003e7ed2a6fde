#include "steinlab/plmap.hpp"

#include <algorithm>

namespace steinlab {

namespace {

std::string point_str(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

Rational piece_slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

// Interpolates on the segment [a, b] at x.
Rational lerp(const Point& a, const Point& b, const Rational& x) {
  return a.y + (x - a.x) * piece_slope(a, b);
}

void require_endomorphism(const PLMap& f, const char* op) {
  if (!f.is_endomorphism()) {
    throw DomainError(std::string(op) + ": map does not fix its interval endpoints");
  }
}

}  // namespace

// ---- IntervalSet ----

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].first < intervals_[i].second)) {
      throw DomainError("IntervalSet: empty interval");
    }
    if (i > 0 && intervals_[i].first < intervals_[i - 1].second) {
      throw DomainError("IntervalSet: intervals overlap or are unsorted");
    }
  }
}

bool IntervalSet::covers(const Rational& a, const Rational& b) const {
  if (!(a < b)) return true;
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.first <= a && b <= iv.second; });
}

bool IntervalSet::within(const Rational& a, const Rational& b) const {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return a <= iv.first && iv.second <= b; });
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return other.covers(iv.first, iv.second); });
}

bool IntervalSet::meets(const Rational& a, const Rational& b) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return std::max(a, iv.first) < std::min(b, iv.second);
  });
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  std::sort(all.begin(), all.end());
  // Open intervals sharing only an endpoint stay separate.
  std::vector<Interval> merged;
  for (auto& iv : all) {
    if (!merged.empty() && iv.first < merged.back().second) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(merged));
}

std::string IntervalSet::str() const {
  if (intervals_.empty()) return "{}";
  std::string out;
  for (const auto& [a, b] : intervals_) {
    if (!out.empty()) out += " U ";
    out += "(" + a.str() + "," + b.str() + ")";
  }
  return out;
}

// ---- PLMap ----

PLMap PLMap::build(std::vector<Point> raw, bool require_fixed_ends) {
  if (raw.size() < 2) throw DomainError("PL map needs at least two breakpoints");
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (!(raw[i - 1].x < raw[i].x)) {
      throw DomainError("x-coordinates not strictly increasing at " + point_str(raw[i]));
    }
    if (!(raw[i - 1].y < raw[i].y)) {
      throw DomainError("y-coordinates not strictly increasing at " + point_str(raw[i]));
    }
  }
  if (require_fixed_ends) {
    if (raw.front().x != raw.front().y) {
      throw DomainError("left endpoint not fixed: " + point_str(raw.front()));
    }
    if (raw.back().x != raw.back().y) {
      throw DomainError("right endpoint not fixed: " + point_str(raw.back()));
    }
  }
  std::vector<Point> pts;
  pts.reserve(raw.size());
  for (auto& p : raw) {
    if (pts.size() >= 2 && piece_slope(pts[pts.size() - 2], pts.back()) == piece_slope(pts.back(), p)) {
      pts.back() = std::move(p);
    } else {
      pts.push_back(std::move(p));
    }
  }
  return PLMap(std::move(pts));
}

PLMap PLMap::canonicalize(std::vector<Point> raw) { return build(std::move(raw), true); }

PLMap PLMap::bijection(std::vector<Point> raw) { return build(std::move(raw), false); }

PLMap PLMap::identity(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("degenerate interval [" + lo.str() + "," + hi.str() + "]");
  return PLMap({{lo, lo}, {hi, hi}});
}

Rational PLMap::slope(std::size_t piece) const {
  return piece_slope(points_.at(piece), points_.at(piece + 1));
}

std::vector<Rational> PLMap::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < piece_count(); ++i) out.push_back(slope(i));
  return out;
}

Rational PLMap::evaluate(const Rational& x) const {
  if (x < lo() || x > hi()) {
    throw DomainError("evaluate: " + x.str() + " outside [" + lo().str() + "," + hi().str() + "]");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  if (it == points_.end()) return points_.back().y;
  return lerp(*(it - 1), *it, x);
}

Rational PLMap::preimage(const Rational& y) const {
  if (y < range_lo() || y > range_hi()) {
    throw DomainError("preimage: " + y.str() + " outside range");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), y,
                             [](const Rational& v, const Point& p) { return v < p.y; });
  if (it == points_.end()) return points_.back().x;
  const Point& a = *(it - 1);
  const Point& b = *it;
  return a.x + (y - a.y) / piece_slope(a, b);
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (g.range_lo() != f.lo() || g.range_hi() != f.hi()) {
    throw DomainError("compose: interval mismatch ([" + f.lo().str() + "," + f.hi().str() +
                      "] vs [" + g.range_lo().str() + "," + g.range_hi().str() + "])");
  }
  // Breakpoints of f∘g: g's breakpoints and preimages of f's breakpoints.
  std::vector<Rational> xs;
  xs.reserve(f.points().size() + g.points().size());
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& gp = g.points();
  const auto& fp = f.points();
  while (i < gp.size() || j < fp.size()) {
    if (j >= fp.size() || (i < gp.size() && gp[i].y <= fp[j].x)) {
      if (j < fp.size() && gp[i].y == fp[j].x) ++j;
      xs.push_back(gp[i].x);
      ++i;
    } else {
      // gp[i-1].y < fp[j].x < gp[i].y
      const Point& a = gp[i - 1];
      const Point& b = gp[i];
      xs.push_back(a.x + (fp[j].x - a.y) / piece_slope(a, b));
      ++j;
    }
  }
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = f.evaluate(g.evaluate(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap::bijection(std::move(pts));
}

PLMap invert(const PLMap& f) {
  std::vector<Point> pts;
  pts.reserve(f.points().size());
  for (const auto& p : f.points()) pts.push_back({p.y, p.x});
  return PLMap::bijection(std::move(pts));
}

PLMap conjugate(const PLMap& h, const PLMap& g) {
  require_endomorphism(g, "conjugate");
  if (h.lo() != g.lo() || h.hi() != g.hi()) throw DomainError("conjugate: interval mismatch");
  return compose(h, compose(g, invert(h)));
}

PLMap power(const PLMap& f, long n) {
  require_endomorphism(f, "power");
  PLMap base = n < 0 ? invert(f) : f;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  PLMap acc = PLMap::identity(f.lo(), f.hi());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

PLMap extend(const PLMap& f, const Rational& new_lo, const Rational& new_hi) {
  require_endomorphism(f, "extend");
  if (new_lo > f.lo() || new_hi < f.hi()) {
    throw DomainError("extend: [" + new_lo.str() + "," + new_hi.str() + "] does not contain [" +
                      f.lo().str() + "," + f.hi().str() + "]");
  }
  std::vector<Point> pts;
  if (new_lo < f.lo()) pts.push_back({new_lo, new_lo});
  pts.insert(pts.end(), f.points().begin(), f.points().end());
  if (new_hi > f.hi()) pts.push_back({new_hi, new_hi});
  return PLMap::canonicalize(std::move(pts));
}

PLMap restrict(const PLMap& f, const Rational& new_lo, const Rational& new_hi) {
  require_endomorphism(f, "restrict");
  if (!(new_lo < new_hi)) throw DomainError("restrict: degenerate interval");
  if (new_lo < f.lo() || new_hi > f.hi()) {
    throw DomainError("restrict: [" + new_lo.str() + "," + new_hi.str() + "] not inside [" +
                      f.lo().str() + "," + f.hi().str() + "]");
  }
  const IntervalSet supp = support(f);
  if (!supp.within(new_lo, new_hi)) {
    throw DomainError("restrict: support " + supp.str() + " leaks outside (" + new_lo.str() +
                      "," + new_hi.str() + ")");
  }
  std::vector<Point> pts{{new_lo, new_lo}};
  for (const auto& p : f.points()) {
    if (new_lo < p.x && p.x < new_hi) pts.push_back(p);
  }
  pts.push_back({new_hi, new_hi});
  return PLMap::canonicalize(std::move(pts));
}

PLMap mirror(const PLMap& f) {
  require_endomorphism(f, "mirror");
  const Rational s = f.lo() + f.hi();
  std::vector<Point> pts;
  for (auto it = f.points().rbegin(); it != f.points().rend(); ++it) {
    pts.push_back({s - it->x, s - it->y});
  }
  return PLMap::canonicalize(std::move(pts));
}

IntervalSet support(const PLMap& f) {
  require_endomorphism(f, "support");
  // Collect the fixed set as closed intervals (possibly points), then take
  // the complement in [lo, hi].
  std::vector<std::pair<Rational, Rational>> fixed;
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[i + 1];
    const Rational da = a.y - a.x;
    const Rational db = b.y - b.x;
    if (da.is_zero()) fixed.emplace_back(a.x, a.x);
    if (db.is_zero()) fixed.emplace_back(b.x, b.x);
    if (da.is_zero() && db.is_zero()) fixed.emplace_back(a.x, b.x);
    if (da.sign() * db.sign() < 0) {
      const Rational z = a.x + da * (b.x - a.x) / (da - db);
      fixed.emplace_back(z, z);
    }
  }
  std::sort(fixed.begin(), fixed.end());
  std::vector<IntervalSet::Interval> gaps;
  Rational reach = fixed.front().second;
  for (const auto& [a, b] : fixed) {
    if (a > reach) gaps.emplace_back(reach, a);
    reach = std::max(reach, b);
  }
  return IntervalSet(std::move(gaps));
}

IntervalSet image(const PLMap& h, const IntervalSet& s) {
  std::vector<IntervalSet::Interval> out;
  for (const auto& [a, b] : s.intervals()) out.emplace_back(h.evaluate(a), h.evaluate(b));
  return IntervalSet(std::move(out));
}

}  // namespace steinlab
