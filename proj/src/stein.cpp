#include "steinlab/stein.hpp"

#include <set>

namespace steinlab {

GroupSpec::GroupSpec(std::vector<long> slopes, Rational lo, Rational hi)
    : slopes_(std::move(slopes)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (slopes_.empty()) throw DomainError("GroupSpec: empty slope set");
  for (long n : slopes_) {
    if (n < 2) throw DomainError("GroupSpec: slope generator " + std::to_string(n) + " < 2");
  }
  if (!(lo_ < hi_)) {
    throw DomainError("GroupSpec: degenerate interval [" + lo_.str() + "," + hi_.str() + "]");
  }
  if (!in_break_module(lo_, slopes_) || !in_break_module(hi_, slopes_)) {
    throw DomainError("GroupSpec: interval endpoints outside the break module");
  }
}

std::vector<BigInt> GroupSpec::break_primes() const {
  std::set<BigInt> primes;
  for (long n : slopes_) {
    for (const auto& p : prime_divisors(BigInt(n))) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

Membership is_member(const PLMap& f, const GroupSpec& spec) {
  if (f.lo() != spec.lo() || f.hi() != spec.hi()) {
    throw DomainError("is_member: map interval [" + f.lo().str() + "," + f.hi().str() +
                      "] differs from group interval [" + spec.lo().str() + "," +
                      spec.hi().str() + "]");
  }
  if (!f.is_endomorphism()) return {false, "map does not fix the interval endpoints"};
  const auto& pts = f.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const Rational* c : {&pts[i].x, &pts[i].y}) {
      if (!in_break_module(*c, spec.slopes())) {
        return {false, "breakpoint (" + pts[i].x.str() + "," + pts[i].y.str() +
                           ") has coordinate " + c->str() + " outside the break module"};
      }
    }
    if (i + 1 < pts.size()) {
      const Rational s = f.slope(i);
      if (!in_slope_group(s, spec.slopes())) {
        return {false, "slope " + s.str() + " on [" + pts[i].x.str() + "," + pts[i + 1].x.str() +
                           "] is not in the slope group"};
      }
    }
  }
  return {true, ""};
}

AbVector& AbVector::operator+=(const AbVector& o) {
  for (std::size_t i = 0; i < 4; ++i) m[i] += o.m[i];
  return *this;
}

AbVector AbVector::operator-() const {
  AbVector out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = -m[i];
  return out;
}

std::pair<std::int64_t, std::int64_t> exponents23(const Rational& slope) {
  std::int64_t p = 0;
  std::int64_t q = 0;
  for (const auto& [prime, e] : factor_rational(slope)) {
    if (prime == 2) {
      p = e;
    } else if (prime == 3) {
      q = e;
    } else {
      throw DomainError("slope " + slope.str() + " is not of the form 2^p 3^q");
    }
  }
  return {p, q};
}

AbVector chi_endpoints(const PLMap& f) {
  const Membership mem = is_member(f, GroupSpec::f23_on(f.lo(), f.hi()));
  if (!mem) throw DomainError("not an element of F_{2,3}: " + mem.diagnosis);
  const auto [p, q] = exponents23(f.initial_slope());
  const auto [pp, qq] = exponents23(f.final_slope());
  return AbVector{{p, q, pp, qq}};
}

std::pair<LogCoord, LogCoord> lambda_rho(const PLMap& f) {
  const AbVector m = chi_endpoints(f);
  return {LogCoord{0, Rational(m.m[0]), Rational(m.m[1])},
          LogCoord{0, Rational(m.m[2]), Rational(m.m[3])}};
}

AbVector ab(const PLMap& f) {
  if (f.lo() != Rational(0) || f.hi() != Rational(1)) {
    throw DomainError("ab: abelianization coordinates are defined on F_{2,3}[0,1] only");
  }
  return chi_endpoints(f);
}

bool Character::is_zero() const {
  for (const auto& c : q) {
    if (!c.is_zero()) return false;
  }
  return s.is_zero() && t.is_zero();
}

std::string Character::str() const {
  static const char* names[] = {"chi02", "chi03", "chi12", "chi13"};
  std::string out;
  auto term = [&](const Rational& c, const char* name) {
    if (c.is_zero()) return;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (c.abs() != Rational(1)) out += c.abs().str() + "*";
    out += name;
  };
  for (std::size_t i = 0; i < 4; ++i) term(q[i], names[i]);
  term(s, "lambda");
  term(t, "rho");
  return out.empty() ? "0" : out;
}

Character& Character::operator+=(const Character& o) {
  for (std::size_t i = 0; i < 4; ++i) q[i] += o.q[i];
  s += o.s;
  t += o.t;
  return *this;
}

Character& Character::operator*=(const Rational& c) {
  for (auto& x : q) x *= c;
  s *= c;
  t *= c;
  return *this;
}

Character Character::operator-() const { return *this * Rational(-1); }

LogCoord char_eval(const Character& chi, const AbVector& m) {
  LogCoord out;
  for (std::size_t i = 0; i < 4; ++i) out.r += chi.q[i] * Rational(m.m[i]);
  out.u = chi.s * Rational(m.m[0]) + chi.t * Rational(m.m[2]);
  out.v = chi.s * Rational(m.m[1]) + chi.t * Rational(m.m[3]);
  return out;
}

LogCoord char_eval(const Character& chi, const PLMap& f) { return char_eval(chi, chi_endpoints(f)); }

std::pair<Character, Character> decompose_LR(const Character& chi) {
  Character left{{chi.q[0], chi.q[1], 0, 0}, chi.s, 0};
  Character right{{0, 0, chi.q[2], chi.q[3]}, 0, chi.t};
  return {left, right};
}

std::array<LogCoord, 4> image_generators(const Character& chi) {
  return {LogCoord{chi.q[0], chi.s, 0}, LogCoord{chi.q[1], 0, chi.s},
          LogCoord{chi.q[2], chi.t, 0}, LogCoord{chi.q[3], 0, chi.t}};
}

std::optional<LogCoord> is_discrete(const Character& chi) {
  if (chi.is_zero()) throw DomainError("is_discrete: zero character");
  const auto gens = image_generators(chi);
  const LogCoord* base = nullptr;
  std::vector<Rational> ratios;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (base == nullptr) base = &g;
    auto c = rational_ratio(g, *base);
    if (!c) return std::nullopt;
    ratios.push_back(*c);
  }
  // A finitely generated subgroup of a Q-line is cyclic, generated by the gcd.
  LogCoord generator = *base * rational_gcd(ratios);
  if (logcoord_sign(generator) < 0) generator = -generator;
  return generator;
}

}  // namespace steinlab
