#include "steinlab/rational.hpp"

#include "steinlab/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace steinlab {

Rational::Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num_part = s.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  auto all_digits = [](std::string_view p) {
    return !p.empty() &&
           std::all_of(p.begin(), p.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt num(std::string(num_part), 10);
  BigInt den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& a, long e) {
  if (e < 0) return pow(a.inverse(), -e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational pow23(long p, long q) { return pow(Rational(2), p) * pow(Rational(3), q); }

std::string to_string(const BigInt& n) { return n.get_str(); }

namespace {

void factor_into(BigInt n, int sign, PrimeExpVec& out) {
  auto add = [&](const BigInt& p, long e) {
    long& slot = out[p];
    slot += sign * e;
    if (slot == 0) out.erase(p);
  };
  for (const unsigned long small : {2ul, 3ul, 5ul, 7ul}) {
    const BigInt p(small);
    const long e = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    if (e > 0) add(p, e);
  }
  BigInt p = 11;
  while (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      add(n, 1);
      break;
    }
    if (p * p > n) {
      add(n, 1);
      break;
    }
    const long e = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    if (e > 0) add(p, e);
    p += 2;
  }
}

}  // namespace

PrimeExpVec factor_rational(const Rational& q) {
  if (q.sign() <= 0) throw DomainError("factor_rational: input " + q.str() + " is not positive");
  PrimeExpVec out;
  factor_into(q.num(), +1, out);
  factor_into(q.den(), -1, out);
  return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  PrimeExpVec f = factor_rational(Rational(n));
  std::vector<BigInt> primes;
  for (const auto& [p, e] : f) primes.push_back(p);
  return primes;
}

Rational multiply_out(const PrimeExpVec& v) {
  Rational out = 1;
  for (const auto& [p, e] : v) out *= pow(Rational(p), e);
  return out;
}

bool in_break_module(const Rational& x, const std::vector<long>& slopes) {
  if (slopes.empty()) throw DomainError("in_break_module: empty slope set");
  BigInt product = 1;
  for (long n : slopes) product *= n;
  BigInt d = x.den();
  BigInt g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), product.get_mpz_t());
    if (g == 1) break;
    d /= g;
  }
  return d == 1;
}

std::optional<std::vector<long>> in_slope_group(const Rational& q,
                                                const std::vector<long>& slopes) {
  if (q.sign() <= 0) throw DomainError("in_slope_group: input " + q.str() + " is not positive");
  std::vector<PrimeExpVec> gens;
  std::set<BigInt> primes;
  for (long n : slopes) {
    if (n < 2) throw DomainError("in_slope_group: slope generator " + std::to_string(n) + " < 2");
    gens.push_back(factor_rational(Rational(n)));
    for (const auto& [p, e] : gens.back()) primes.insert(p);
  }
  const PrimeExpVec target = factor_rational(q);
  for (const auto& [p, e] : target) {
    if (!primes.contains(p)) return std::nullopt;
  }
  // Rows: primes; columns: generators.
  IntMatrix a;
  IntVector b;
  for (const BigInt& p : primes) {
    IntVector row;
    for (const auto& g : gens) {
      auto it = g.find(p);
      row.emplace_back(it == g.end() ? 0L : it->second);
    }
    a.push_back(std::move(row));
    auto it = target.find(p);
    b.emplace_back(it == target.end() ? 0L : it->second);
  }
  auto solution = solve_integer(a, b, slopes.size());
  if (!solution) return std::nullopt;
  std::vector<long> exps;
  for (const BigInt& e : *solution) {
    if (!e.fits_slong_p()) throw DomainError("in_slope_group: exponent overflow");
    exps.push_back(e.get_si());
  }
  return exps;
}

Rational rational_gcd(const std::vector<Rational>& values) {
  BigInt num = 0;
  BigInt den = 1;
  for (const Rational& v : values) {
    if (v.is_zero()) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den().get_mpz_t());
  }
  return Rational(num, den);
}

}  // namespace steinlab
