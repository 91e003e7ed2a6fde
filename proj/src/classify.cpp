#include "steinlab/classify.hpp"

#include "steinlab/builders.hpp"

#include <random>

namespace steinlab {

std::string to_string(SigmaTier tier) {
  switch (tier) {
    case SigmaTier::NotInSigma1:
      return "NotInSigma1";
    case SigmaTier::Sigma1NotSigma2:
      return "Sigma1NotSigma2";
    case SigmaTier::SigmaInfinity:
      return "SigmaInfinity";
  }
  return "unknown";
}

SigmaTier classify_character(const Character& chi) {
  if (chi.is_zero()) throw DomainError("classify_character: zero character");
  // With rational q, [chi] = [lambda] forces q = 0, t = 0 and s > 0, since a
  // nonzero rational is never a real multiple of ln2 and ln3 at once.
  const bool q_zero = chi.q[0].is_zero() && chi.q[1].is_zero() && chi.q[2].is_zero() &&
                      chi.q[3].is_zero();
  if (q_zero) {
    const int s = chi.s.sign();
    const int t = chi.t.sign();
    if ((s > 0 && t == 0) || (s == 0 && t > 0)) return SigmaTier::NotInSigma1;
    if (s > 0 && t > 0) return SigmaTier::Sigma1NotSigma2;
  }
  return SigmaTier::SigmaInfinity;
}

LatticeSubgroup LatticeSubgroup::from_ab(const std::vector<AbVector>& vs) {
  LatticeSubgroup out;
  for (const auto& v : vs) {
    out.generators.push_back({BigInt(static_cast<long>(v.m[0])), BigInt(static_cast<long>(v.m[1])),
                              BigInt(static_cast<long>(v.m[2])), BigInt(static_cast<long>(v.m[3]))});
  }
  return out;
}

namespace {

LatticeSubgroup from_rows(const IntMatrix& rows) {
  LatticeSubgroup out;
  for (const auto& r : rows) out.generators.push_back({r[0], r[1], r[2], r[3]});
  return out;
}

// Coefficients of x*y in the basis (ln2^2, ln2 ln3, ln3^2), for pure-log x, y.
std::array<Rational, 3> log_product(const LogCoord& x, const LogCoord& y) {
  return {x.u * y.u, x.u * y.v + x.v * y.u, x.v * y.v};
}

// Whether (l1, r1) and (l2, r2) are parallel in R^2. The determinant is a
// rational quadratic form in ln2, ln3; it vanishes only when all of its
// coefficients do, because ln2/ln3 is transcendental.
bool parallel(const LogCoord& l1, const LogCoord& r1, const LogCoord& l2, const LogCoord& r2) {
  const auto p = log_product(l1, r2);
  const auto q = log_product(r1, l2);
  return p == q;
}

Obstruction normalized_obstruction(const LogCoord& a, const LogCoord& b) {
  if (b.is_zero()) return {LogCoord::constant(1), LogCoord::constant(0)};
  if (a.is_zero()) return {LogCoord::constant(0), LogCoord::constant(1)};
  if (auto c = rational_ratio(a, b)) {
    return {LogCoord::constant(Rational(c->num())), LogCoord::constant(Rational(c->den()))};
  }
  return {a, b};
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

LatticeSubgroup LatticeSubgroup::canonical() const {
  IntMatrix rows;
  for (const auto& g : generators) rows.push_back({g[0], g[1], g[2], g[3]});
  return from_rows(row_hermite(rows, 4));
}

LatticeSubgroup kernel_lattice(const Character& chi) {
  const std::vector<std::vector<Rational>> rows{
      {chi.q[0], chi.q[1], chi.q[2], chi.q[3]},
      {chi.s, 0, chi.t, 0},
      {0, chi.s, 0, chi.t},
  };
  return from_rows(integer_kernel(clear_denominators(rows), 4));
}

FinitenessReport normal_subgroup_finiteness(const LatticeSubgroup& lattice) {
  FinitenessReport report;
  std::vector<std::pair<LogCoord, LogCoord>> values;  // (lambda(v), rho(v)), nonzero only
  bool lambda_nonzero = false;
  bool rho_nonzero = false;
  for (const auto& g : lattice.generators) {
    LogCoord l{0, Rational(g[0]), Rational(g[1])};
    LogCoord r{0, Rational(g[2]), Rational(g[3])};
    lambda_nonzero = lambda_nonzero || !l.is_zero();
    rho_nonzero = rho_nonzero || !r.is_zero();
    if (!l.is_zero() || !r.is_zero()) values.emplace_back(std::move(l), std::move(r));
  }
  report.fg = lambda_nonzero && rho_nonzero;

  // Solutions (a, b) of a lambda(v) + b rho(v) = 0 for every generator v.
  if (values.empty()) {
    report.obstruction = Obstruction{LogCoord::constant(1), LogCoord::constant(1)};
  } else {
    const auto& [l0, r0] = values.front();
    bool one_dimensional = true;
    for (const auto& [l, r] : values) {
      if (!parallel(l0, r0, l, r)) {
        one_dimensional = false;
        break;
      }
    }
    // The solution line is spanned by (rho, -lambda); it meets the closed
    // positive quadrant away from 0 iff lambda * rho <= 0.
    if (one_dimensional && logcoord_sign(l0) * logcoord_sign(r0) <= 0) {
      const LogCoord a = logcoord_sign(r0) < 0 ? -r0 : r0;
      const LogCoord b = logcoord_sign(l0) < 0 ? -l0 : l0;
      report.obstruction = normalized_obstruction(a, b);
    }
  }
  report.fp = !report.obstruction.has_value();
  report.f_infinity = report.fp;
  return report;
}

FinitenessReport kernel_finiteness(const Character& chi) {
  if (chi.is_zero()) throw DomainError("kernel_finiteness: zero character");
  return normal_subgroup_finiteness(kernel_lattice(chi));
}

FinitenessReport normal_closure_classification(const std::vector<PLMap>& elems) {
  std::vector<AbVector> images;
  bool nontrivial = false;
  for (const auto& f : elems) {
    images.push_back(ab(f));
    nontrivial = nontrivial || !f.is_identity();
  }
  if (!nontrivial) {
    throw DomainError("normal_closure_classification: all elements are the identity");
  }
  return normal_subgroup_finiteness(LatticeSubgroup::from_ab(images));
}

PLMap random_element(std::uint64_t seed, std::size_t max_word_length) {
  std::mt19937_64 rng(splitmix(seed));
  static const Rational radii[] = {Rational(1, 4), Rational(1, 2), Rational(2, 3),
                                   Rational(17, 24)};
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const std::size_t length = 1 + static_cast<std::size_t>(rng() % max_word_length);
  PLMap acc = PLMap::identity(0, 1);
  for (std::size_t i = 0; i < length; ++i) {
    long p = 0;
    long q = 0;
    while (p == 0 && q == 0) {
      p = pick(-2, 2);
      q = pick(-2, 2);
    }
    const Rational& r = radii[rng() % 4];
    PLMap letter = PLMap::identity(0, 1);
    switch (rng() % 3) {
      case 0:
        letter = special_element(p, q, r);
        break;
      case 1:
        letter = special_element_right(p, q, r);
        break;
      default:
        letter = transport_to_upper_half(special_element(p, q, r));
        break;
    }
    if (rng() % 2) letter = invert(letter);
    acc = compose(acc, letter);
  }
  return acc;
}

HnnCertificate verify_hnn(long a, long b, std::size_t sample_size, std::uint64_t seed) {
  HnnCertificate cert;
  cert.t = stable_letter(a, b);
  cert.samples = sample_size;
  const PLMap& t = cert.t;
  const PLMap t_inv = invert(t);
  const Rational half(1, 2);
  const GroupSpec f23 = GroupSpec::f23();

  const Character chi = Rational(a) * Character::chi02() + Rational(b) * Character::chi03();
  cert.chi_zero = char_eval(chi, t).is_zero();
  cert.lambda_negative = logcoord_sign(lambda_rho(t).first) < 0;
  cert.intersection_trivial = t.evaluate(half) < half;

  // B^t = t^{-1} B t has support in [t^{-1}(1/2), 1].
  const Rational edge = t_inv.evaluate(half);
  bool mapped_in = edge > half && is_member(t, f23).member;
  const std::uint64_t case_seed = splitmix(seed ^ splitmix(static_cast<std::uint64_t>(a) * 131 +
                                                           static_cast<std::uint64_t>(b)));
  for (std::size_t k = 0; k < sample_size && mapped_in; ++k) {
    const PLMap g = transport_to_upper_half(random_element(case_seed + k));
    if (!is_member(g, f23) || !support(g).within(half, 1)) {
      mapped_in = false;
      break;
    }
    const PLMap moved = conjugate(t_inv, g);
    mapped_in = is_member(moved, f23).member && support(moved).within(edge, 1);
  }
  cert.base_mapped_in = mapped_in;

  const PLMap witness = transport_to_upper_half(special_element(1, 0, half));
  cert.proper = edge > half && is_member(witness, f23).member && support(witness).within(half, 1) &&
                support(witness).meets(half, edge);
  return cert;
}

}  // namespace steinlab
