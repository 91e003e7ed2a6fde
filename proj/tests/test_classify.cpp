#include "oracles.hpp"
#include "steinlab/builders.hpp"
#include "steinlab/classify.hpp"

#include <doctest.h>

#include <random>

using namespace steinlab;

namespace {

using Vec4 = std::array<BigInt, 4>;

const Character L = Character::lambda();
const Character R = Character::rho();

Rational rq(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
}

Character random_character(std::mt19937_64& rng) {
  Character chi{{rq(rng), rq(rng), rq(rng), rq(rng)}, rq(rng), rq(rng)};
  // Make the q = 0 branches common enough to matter.
  if (rng() % 3 == 0) chi.q = {0, 0, 0, 0};
  return chi;
}

// Greedy reduction against a row echelon basis (pivot columns increasing).
bool in_echelon_span(Vec4 v, const std::vector<Vec4>& rows) {
  for (const auto& row : rows) {
    std::size_t c = 0;
    while (c < 4 && row[c] == 0) ++c;
    if (c == 4) continue;
    if (v[c] % row[c] != 0) return false;
    const BigInt k = v[c] / row[c];
    for (std::size_t j = 0; j < 4; ++j) v[j] -= k * row[j];
  }
  return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0;
}

bool annihilates(const Character& chi, const Vec4& v) {
  AbVector a;
  for (std::size_t i = 0; i < 4; ++i) a.m[i] = v[i].get_si();
  return char_eval(chi, a).is_zero();
}

LatticeSubgroup lattice(std::vector<Vec4> gens) { return LatticeSubgroup{std::move(gens)}; }

}  // namespace

TEST_CASE("classify_character examples") {
  CHECK(classify_character(L) == SigmaTier::NotInSigma1);
  CHECK(classify_character(L + Rational(2) * R) == SigmaTier::Sigma1NotSigma2);
  CHECK(classify_character(-L) == SigmaTier::SigmaInfinity);
  CHECK(classify_character(Character::chi02() - Rational(7) * Character::chi13()) == SigmaTier::SigmaInfinity);
  CHECK_THROWS_AS(classify_character(Character{}), DomainError);
  CHECK(to_string(SigmaTier::Sigma1NotSigma2) == "Sigma1NotSigma2");
  CHECK(SigmaTier::NotInSigma1 < SigmaTier::Sigma1NotSigma2);
  CHECK(SigmaTier::Sigma1NotSigma2 < SigmaTier::SigmaInfinity);
}

TEST_CASE("classify_character reproduces the twelve-entry table") {
  const std::vector<std::pair<Character, SigmaTier>> table{
      {L, SigmaTier::NotInSigma1},
      {R, SigmaTier::NotInSigma1},
      {L + R, SigmaTier::Sigma1NotSigma2},
      {Rational(2) * L + Rational(3) * R, SigmaTier::Sigma1NotSigma2},
      {Rational(1, 5) * L + R, SigmaTier::Sigma1NotSigma2},
      {-L, SigmaTier::SigmaInfinity},
      {-R, SigmaTier::SigmaInfinity},
      {Character::chi02(), SigmaTier::SigmaInfinity},
      {Character::chi03() - Character::chi12(), SigmaTier::SigmaInfinity},
      {L - R, SigmaTier::SigmaInfinity},
      {Character::chi02() + L, SigmaTier::SigmaInfinity},
      {Rational(3) * Character::chi13(), SigmaTier::SigmaInfinity},
  };
  for (const auto& [chi, tier] : table) {
    CAPTURE(chi.str());
    CHECK(classify_character(chi) == tier);
  }
}

TEST_CASE("classify_character is invariant under positive scaling") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 500; ++i) {
    const Character chi = random_character(rng);
    if (chi.is_zero()) continue;
    const Rational c(1 + static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 50));
    CHECK(classify_character(c * chi) == classify_character(chi));
  }
}

TEST_CASE("kernel_lattice examples") {
  CHECK(kernel_lattice(L).generators == std::vector<Vec4>{{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(kernel_lattice(Character::chi02()).generators ==
        std::vector<Vec4>{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(kernel_lattice(Character{}).generators ==
        std::vector<Vec4>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(kernel_lattice(L + R).generators == std::vector<Vec4>{{1, 0, -1, 0}, {0, 1, 0, -1}});
}

TEST_CASE("kernel_lattice matches a brute-force box search") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 40; ++i) {
    // Small integer coefficients so that the kernel meets the box nontrivially.
    auto small = [&] { return Rational(static_cast<long>(rng() % 5) - 2); };
    const Character chi{{small(), small(), small(), small()}, small(), small()};
    const auto basis = kernel_lattice(chi).generators;
    for (const auto& v : basis) CHECK(annihilates(chi, v));
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            const Vec4 v{a, b, c, d};
            CHECK(annihilates(chi, v) == in_echelon_span(v, basis));
          }
  }
}

TEST_CASE("normal_subgroup_finiteness examples") {
  const FinitenessReport all = normal_subgroup_finiteness(
      lattice({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(all.fg);
  CHECK(all.fp);
  CHECK(all.f_infinity);
  CHECK_FALSE(all.obstruction.has_value());

  const FinitenessReport right_only = normal_subgroup_finiteness(lattice({{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_FALSE(right_only.fg);
  CHECK_FALSE(right_only.fp);
  REQUIRE(right_only.obstruction.has_value());
  CHECK(right_only.obstruction->a == LogCoord::constant(1));
  CHECK(right_only.obstruction->b.is_zero());

  const FinitenessReport diag = normal_subgroup_finiteness(lattice({{1, 0, -1, 0}, {0, 1, 0, -1}}));
  CHECK(diag.fg);
  CHECK_FALSE(diag.fp);
  CHECK_FALSE(diag.f_infinity);
  REQUIRE(diag.obstruction.has_value());
  CHECK(diag.obstruction->a == LogCoord::constant(1));
  CHECK(diag.obstruction->b == LogCoord::constant(1));

  const FinitenessReport empty = normal_subgroup_finiteness(lattice({}));
  CHECK_FALSE(empty.fg);
  CHECK(empty.obstruction.has_value());
}

TEST_CASE("normal_subgroup_finiteness on span{(1,0,0,-1)}") {
  // lambda = ln2, rho = -ln3: a ln2 - b ln3 = 0 at (a, b) = (ln3, ln2).
  const FinitenessReport r = normal_subgroup_finiteness(lattice({{1, 0, 0, -1}}));
  CHECK(r.fg);
  CHECK_FALSE(r.fp);
  REQUIRE(r.obstruction.has_value());
  const LogCoord& a = r.obstruction->a;
  const LogCoord& b = r.obstruction->b;
  CHECK(oracle::float200_sign(a.r, a.u, a.v) > 0);
  CHECK(oracle::float200_sign(b.r, b.u, b.v) > 0);
  // a * ln2 + b * (-ln3) = ln3 ln2 - ln2 ln3 = 0.
  CHECK(a == LogCoord::log3());
  CHECK(b == LogCoord::log2());
}

TEST_CASE("obstruction annihilates the lattice on mixed generators") {
  // lambda(v) = 2 ln2 + ln3, rho(v) = -(ln2 + 3 ln3) for v = (2,1,-1,-3); obstruction
  // must be (ln2 + 3 ln3, 2 ln2 + ln3) up to scaling, checked numerically.
  const FinitenessReport r = normal_subgroup_finiteness(lattice({{2, 1, -1, -3}, {4, 2, -2, -6}}));
  CHECK(r.fg);
  CHECK_FALSE(r.fp);
  REQUIRE(r.obstruction.has_value());
  const double a = oracle::approx(r.obstruction->a.r, r.obstruction->a.u, r.obstruction->a.v);
  const double b = oracle::approx(r.obstruction->b.r, r.obstruction->b.u, r.obstruction->b.v);
  const double lam = oracle::approx(0, 2, 1);
  const double rho = oracle::approx(0, -1, -3);
  CHECK(a * lam + b * rho == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(a >= 0);
  CHECK(b >= 0);

  // Same signs on lambda and rho: no nonnegative combination vanishes.
  CHECK(normal_subgroup_finiteness(lattice({{1, 0, 1, 0}})).fp);
  // Non-parallel pairs: only (0, 0) solves the system.
  CHECK(normal_subgroup_finiteness(lattice({{1, 0, -1, 0}, {0, 1, -1, 0}})).fp);
}

TEST_CASE("kernel_finiteness examples") {
  CHECK_FALSE(kernel_finiteness(L).fg);
  CHECK_FALSE(kernel_finiteness(R).fg);
  const FinitenessReport lr = kernel_finiteness(L + R);
  CHECK(lr.fg);
  CHECK_FALSE(lr.fp);
  CHECK(kernel_finiteness(Character::chi02()).f_infinity);
  CHECK_THROWS_AS(kernel_finiteness(Character{}), DomainError);
}

TEST_CASE("discrete characters sit in the top tier with F_infinity kernels") {
  std::mt19937_64 rng(71);
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 200; ++i) {
    Character chi = random_character(rng);
    if (i % 4 != 0) chi.s = chi.t = 0;
    if (chi.is_zero() || !is_discrete(chi)) continue;
    ++seen;
    CHECK(classify_character(chi) == SigmaTier::SigmaInfinity);
    CHECK(kernel_finiteness(chi).f_infinity);
  }
  CHECK(seen == 200);
}

TEST_CASE("report chain and classifier consistency") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 300; ++i) {
    const Character chi = random_character(rng);
    if (chi.is_zero()) continue;
    const FinitenessReport r = kernel_finiteness(chi);
    CHECK((!r.f_infinity || r.fp));
    CHECK((!r.fp || r.fg));
    CHECK(r.fp == r.f_infinity);
    CHECK(r.fp == !r.obstruction.has_value());
    // fg fails iff lambda or rho vanishes on the whole kernel lattice.
    bool lambda_vanishes = true, rho_vanishes = true;
    for (const auto& v : kernel_lattice(chi).generators) {
      lambda_vanishes = lambda_vanishes && annihilates(L, v);
      rho_vanishes = rho_vanishes && annihilates(R, v);
    }
    CHECK(r.fg == !(lambda_vanishes || rho_vanishes));
  }
}

TEST_CASE("normal_closure_classification examples") {
  const PLMap f2 = special_element(1, 0, Rational(1, 2));
  CHECK_FALSE(normal_closure_classification({f2}).fg);
  const FinitenessReport both = normal_closure_classification({f2, mirror(f2)});
  CHECK(both.fg);
  CHECK(both.fp);
  CHECK(both.f_infinity);
  const PLMap f = random_element(5), g = random_element(6);
  const PLMap comm = compose(compose(f, g), compose(invert(f), invert(g)));
  if (!comm.is_identity()) CHECK_FALSE(normal_closure_classification({comm}).fg);
  CHECK_THROWS_AS(normal_closure_classification({PLMap::identity(0, 1)}), DomainError);
  CHECK_THROWS_AS(normal_closure_classification({}), DomainError);
}

TEST_CASE("verify_hnn examples") {
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {0, 1}, {-2, 3}}) {
    const HnnCertificate c = verify_hnn(a, b, 20, 0);
    CHECK(c.chi_zero);
    CHECK(c.lambda_negative);
    CHECK(c.base_mapped_in);
    CHECK(c.intersection_trivial);
    CHECK(c.proper);
    CHECK(c.samples == 20);
  }
  CHECK_THROWS_AS(verify_hnn(2, 4, 5), DomainError);
}

TEST_CASE("random_element is deterministic and lies in F23") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(random_element(seed) == random_element(seed));
    CHECK(is_member(random_element(seed, 6), GroupSpec::f23()).member);
  }
}
