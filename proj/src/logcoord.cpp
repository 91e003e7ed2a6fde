#include "steinlab/logcoord.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <string>

namespace steinlab {

LogCoord& LogCoord::operator+=(const LogCoord& o) {
  r += o.r;
  u += o.u;
  v += o.v;
  return *this;
}

LogCoord& LogCoord::operator-=(const LogCoord& o) {
  r -= o.r;
  u -= o.u;
  v -= o.v;
  return *this;
}

LogCoord& LogCoord::operator*=(const Rational& c) {
  r *= c;
  u *= c;
  v *= c;
  return *this;
}

std::string LogCoord::str() const {
  std::string out;
  auto term = [&](const Rational& c, const char* name) {
    if (c.is_zero()) return;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (name == nullptr) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += name;
    }
  };
  term(r, nullptr);
  term(u, "ln2");
  term(v, "ln3");
  return out.empty() ? "0" : out;
}

int default_precision_bits() {
  if (const char* env = std::getenv("STEINLAB_PRECISION_BITS")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 8 && bits <= (1L << 20)) {
      return static_cast<int>(bits);
    }
  }
  return 64;
}

int cmp_b_ln2_minus_a_ln3(const BigInt& a, const BigInt& b) {
  if (!a.fits_ulong_p() && !BigInt(-a).fits_ulong_p()) {
    throw DomainError("cmp_b_ln2_minus_a_ln3: exponent too large");
  }
  if (!b.fits_ulong_p() && !BigInt(-b).fits_ulong_p()) {
    throw DomainError("cmp_b_ln2_minus_a_ln3: exponent too large");
  }
  // b ln2 - a ln3 has the sign of 2^b 3^{-a} - 1.
  auto pos = [](const BigInt& x) { return x > 0 ? BigInt(x) : BigInt(0); };
  auto neg = [](const BigInt& x) { return x < 0 ? BigInt(-x) : BigInt(0); };
  BigInt lhs, rhs, t;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, pos(b).get_ui());
  mpz_ui_pow_ui(t.get_mpz_t(), 3, neg(a).get_ui());
  lhs *= t;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, neg(b).get_ui());
  mpz_ui_pow_ui(t.get_mpz_t(), 3, pos(a).get_ui());
  rhs *= t;
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

namespace {

// Bound on exponents for which the integer power comparison is used.
constexpr unsigned long kMaxExactExponent = 1UL << 16;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Encloses c * k (k > 0, given as [klo, khi]) and accumulates into [lo, hi].
void add_scaled(const Rational& c, mpfr_ptr klo, mpfr_ptr khi, mpfr_ptr lo, mpfr_ptr hi,
                mpfr_prec_t prec) {
  if (c.is_zero()) return;
  Mpfr clo(prec), chi(prec), plo(prec), phi(prec);
  mpfr_set_q(clo.get(), c.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(chi.get(), c.raw().get_mpq_t(), MPFR_RNDU);
  if (c.sign() > 0) {
    mpfr_mul(plo.get(), clo.get(), klo, MPFR_RNDD);
    mpfr_mul(phi.get(), chi.get(), khi, MPFR_RNDU);
  } else {
    mpfr_mul(plo.get(), clo.get(), khi, MPFR_RNDD);
    mpfr_mul(phi.get(), chi.get(), klo, MPFR_RNDU);
  }
  mpfr_add(lo, lo, plo.get(), MPFR_RNDD);
  mpfr_add(hi, hi, phi.get(), MPFR_RNDU);
}

int interval_sign(const LogCoord& x, int initial_bits) {
  for (mpfr_prec_t prec = initial_bits;; prec *= 2) {
    Mpfr l2lo(prec), l2hi(prec), l3lo(prec), l3hi(prec), three(prec);
    mpfr_const_log2(l2lo.get(), MPFR_RNDD);
    mpfr_const_log2(l2hi.get(), MPFR_RNDU);
    mpfr_set_ui(three.get(), 3, MPFR_RNDN);
    mpfr_log(l3lo.get(), three.get(), MPFR_RNDD);
    mpfr_log(l3hi.get(), three.get(), MPFR_RNDU);

    Mpfr lo(prec), hi(prec);
    mpfr_set_q(lo.get(), x.r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.r.raw().get_mpq_t(), MPFR_RNDU);
    add_scaled(x.u, l2lo.get(), l2hi.get(), lo.get(), hi.get(), prec);
    add_scaled(x.v, l3lo.get(), l3hi.get(), lo.get(), hi.get(), prec);
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
}

}  // namespace

int logcoord_sign(const LogCoord& x, int initial_bits) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return x.r.sign();
  if (x.r.is_zero()) {
    // Scale u ln2 + v ln3 to integers U ln2 + V ln3 and compare powers.
    BigInt l;
    mpz_lcm(l.get_mpz_t(), x.u.den().get_mpz_t(), x.v.den().get_mpz_t());
    const BigInt big_u = x.u.num() * (l / x.u.den());
    const BigInt big_v = x.v.num() * (l / x.v.den());
    const BigInt abs_u = abs(big_u);
    const BigInt abs_v = abs(big_v);
    if (abs_u <= kMaxExactExponent && abs_v <= kMaxExactExponent) {
      return cmp_b_ln2_minus_a_ln3(-big_v, big_u);
    }
  }
  return interval_sign(x, initial_bits < 8 ? 8 : initial_bits);
}

std::optional<Rational> rational_ratio(const LogCoord& x, const LogCoord& y) {
  if (y.is_zero()) throw DomainError("rational_ratio: divisor is zero");
  Rational c;
  if (!y.r.is_zero()) {
    c = x.r / y.r;
  } else if (!y.u.is_zero()) {
    c = x.u / y.u;
  } else {
    c = x.v / y.v;
  }
  if (x == y * c) return c;
  return std::nullopt;
}

}  // namespace steinlab
