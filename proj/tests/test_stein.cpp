#include "oracles.hpp"
#include "steinlab/builders.hpp"
#include "steinlab/classify.hpp"
#include "steinlab/stein.hpp"

#include <doctest.h>

#include <random>

using namespace steinlab;

namespace {

const Rational half(1, 2);

PLMap two_slope() { return PLMap::canonicalize({{0, 0}, {Rational(1, 4), half}, {1, 1}}); }

PLMap f2() {
  return PLMap::canonicalize({{0, 0}, {Rational(3, 16), Rational(3, 8)}, {Rational(3, 4), Rational(3, 4)}, {1, 1}});
}

}  // namespace

TEST_CASE("group spec presets and validation") {
  CHECK(GroupSpec::thompson_f().slopes() == std::vector<long>{2});
  CHECK(GroupSpec::f_n(3).slopes() == std::vector<long>{3});
  CHECK(GroupSpec::f23_on(half, 1).lo() == half);
  CHECK(GroupSpec::f_s_r({3, 4, 5}, 1).break_primes() == std::vector<BigInt>{2, 3, 5});
  CHECK_THROWS_AS(GroupSpec({}, 0, 1), DomainError);
  CHECK_THROWS_AS(GroupSpec({1}, 0, 1), DomainError);
  CHECK_THROWS_AS(GroupSpec({2, 3}, 1, 1), DomainError);
  CHECK_THROWS_AS(GroupSpec({2, 3}, 0, Rational(1, 5)), DomainError);
}

TEST_CASE("is_member examples") {
  CHECK(is_member(PLMap::identity(0, 1), GroupSpec::f23()).member);
  const Membership in_f = is_member(two_slope(), GroupSpec::thompson_f());
  CHECK_FALSE(in_f.member);
  CHECK(in_f.diagnosis.find("slope 2/3") != std::string::npos);
  // Breaks 1/4, 1/2 lie in Z[1/6] and slopes 2, 2/3 in <2,3>.
  CHECK(in_break_module(Rational(1, 4), {2, 3}));
  CHECK(in_slope_group(Rational(2, 3), {2, 3}).has_value());
  CHECK(is_member(two_slope(), GroupSpec::f23()).member);

  const PLMap fifth = PLMap::canonicalize({{0, 0}, {Rational(1, 5), Rational(2, 5)}, {Rational(3, 5), Rational(3, 5)}, {1, 1}});
  const Membership m = is_member(fifth, GroupSpec::f23());
  CHECK_FALSE(m.member);
  CHECK(m.diagnosis.find("(1/5,2/5)") != std::string::npos);
  // Slopes 2, 1/2, 1 and breaks in Z[1/10].
  CHECK(is_member(fifth, GroupSpec({2, 5}, 0, 1)).member);
  CHECK_THROWS_AS(is_member(two_slope(), GroupSpec::f23_on(0, 2)), DomainError);
}

TEST_CASE("membership in F_3 and F_{S}^r") {
  // Slopes 3, 1, 1/3.
  const PLMap f3 = PLMap::canonicalize({{0, 0}, {Rational(1, 9), Rational(1, 3)}, {Rational(1, 3), Rational(5, 9)}, {Rational(2, 3), Rational(2, 3)}, {1, 1}});
  CHECK(f3.slopes() == std::vector<Rational>{3, 1, Rational(1, 3), 1});
  CHECK(is_member(f3, GroupSpec::f_n(3)).member);
  CHECK_FALSE(is_member(f3, GroupSpec::thompson_f()).member);
  CHECK(is_member(f3, GroupSpec::f23()).member);
  const PLMap on_r = PLMap::canonicalize({{0, 0}, {Rational(1, 5), Rational(4, 5)}, {2, 2}});
  // Slopes 4 and (6/5)/(9/5) = 2/3; 2/3 is not in <4,5>.
  CHECK_FALSE(is_member(on_r, GroupSpec::f_s_r({4, 5}, 2)).member);
  CHECK(is_member(on_r, GroupSpec::f_s_r({2, 3, 5}, 2)).member);
}

TEST_CASE("chi_endpoints examples") {
  CHECK(chi_endpoints(PLMap::identity(0, 1)) == AbVector{{0, 0, 0, 0}});
  // Final slope (1 - 1/2)/(1 - 1/4) = 2/3 = 2^1 3^-1.
  CHECK(chi_endpoints(two_slope()) == AbVector{{1, 0, 1, -1}});
  CHECK(chi_endpoints(f2()) == AbVector{{1, 0, 0, 0}});
  CHECK_THROWS_AS(chi_endpoints(PLMap::canonicalize({{0, 0}, {Rational(1, 5), Rational(2, 5)}, {1, 1}})), DomainError);
}

TEST_CASE("lambda_rho examples") {
  const auto [l0, r0] = lambda_rho(PLMap::identity(0, 1));
  CHECK(l0.is_zero());
  CHECK(r0.is_zero());
  const auto [l, r] = lambda_rho(f2());
  CHECK(l == LogCoord::log2());
  CHECK(r.is_zero());
  const auto [lt, rt] = lambda_rho(stable_letter(1, 0));
  CHECK(lt == -LogCoord::log3());
  CHECK(logcoord_sign(lt) < 0);
  CHECK(rt.is_zero());
}

TEST_CASE("ab is a homomorphism on random builder words") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const PLMap f = random_element(seed);
    const PLMap g = random_element(seed + 100000);
    CHECK(ab(compose(f, g)) == ab(f) + ab(g));
    CHECK(ab(invert(f)) == -ab(f));
  }
  CHECK_THROWS_AS(ab(PLMap::identity(-1, 1)), DomainError);
}

TEST_CASE("char_eval examples and additivity") {
  CHECK(char_eval(Character::chi02(), f2()) == LogCoord{1, 0, 0});
  CHECK(char_eval(Character::lambda(), f2()) == LogCoord{0, 1, 0});
  const Character any{{Rational(1, 3), 2, -1, 5}, Rational(-2), Rational(7, 2)};
  CHECK(char_eval(any, PLMap::identity(0, 1)).is_zero());
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    auto rq = [&] { return Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)); };
    const Character chi{{rq(), rq(), rq(), rq()}, rq(), rq()};
    const PLMap f = random_element(rng());
    const PLMap g = random_element(rng());
    CHECK(char_eval(chi, compose(f, g)) == char_eval(chi, f) + char_eval(chi, g));
  }
}

TEST_CASE("decompose_LR examples and recomposition") {
  const auto [l1, r1] = decompose_LR(Character::lambda() + Character::rho());
  CHECK(l1 == Character::lambda());
  CHECK(r1 == Character::rho());
  const auto [l2, r2] = decompose_LR(Character::chi02());
  CHECK(l2 == Character::chi02());
  CHECK(r2.is_zero());
  const Character mixed = Rational(2) * Character::chi03() - Rational(3) * Character::rho();
  const auto [l3, r3] = decompose_LR(mixed);
  CHECK(l3 == Rational(2) * Character::chi03());
  CHECK(r3 == Rational(-3) * Character::rho());
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    auto rq = [&] { return Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)); };
    const Character chi{{rq(), rq(), rq(), rq()}, rq(), rq()};
    const auto [l, r] = decompose_LR(chi);
    CHECK(l + r == chi);
  }
}

TEST_CASE("is_discrete examples") {
  CHECK(is_discrete(Character::chi02()) == LogCoord::constant(1));
  CHECK_FALSE(is_discrete(Character::lambda()).has_value());
  CHECK_FALSE(is_discrete(Character::rho()).has_value());
  // Values {2, 0, 0, 4}: gcd 2.
  CHECK(is_discrete(Rational(2) * Character::chi02() + Rational(4) * Character::chi13()) == LogCoord::constant(2));
  CHECK(is_discrete(Rational(-3) * Character::chi03()) == LogCoord::constant(3));
  CHECK(is_discrete(Character{{Rational(1, 2), Rational(1, 3), 0, 0}, 0, 0}) == LogCoord::constant(Rational(1, 6)));
  CHECK_THROWS_AS(is_discrete(Character{}), DomainError);
}

TEST_CASE("rational characters are always discrete") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    auto rq = [&] { return Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 7)); };
    const Character chi{{rq(), rq(), rq(), rq()}, 0, 0};
    if (chi.is_zero()) continue;
    const auto gen = is_discrete(chi);
    REQUIRE(gen.has_value());
    CHECK(gen->is_rational());
    CHECK(gen->r > Rational(0));
    // Every image generator is an integer multiple of the generator.
    for (const auto& v : image_generators(chi)) CHECK((v.r / gen->r).is_integer());
  }
}

TEST_CASE("membership is closed under the group operations") {
  const GroupSpec f23 = GroupSpec::f23();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const PLMap f = random_element(seed, 4);
    const PLMap g = random_element(seed + 7777, 4);
    CHECK(is_member(f, f23).member);
    CHECK(is_member(compose(f, g), f23).member);
    CHECK(is_member(invert(f), f23).member);
    CHECK(is_member(conjugate(g, f), f23).member);
  }
}
