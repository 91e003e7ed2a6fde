#include "steinlab/verify.hpp"

#include "steinlab/builders.hpp"

#include <numeric>

namespace steinlab::verify {

namespace {

const Rational kRadii[] = {Rational(1, 4), Rational(1, 2), Rational(2, 3), Rational(17, 24)};

bool all_true(const io::Json& obj) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_boolean() && !value.get<bool>()) return false;
  }
  return true;
}

}  // namespace

bool sign_constant_on_support(const PLMap& f) {
  const auto& pts = f.points();
  const IntervalSet supp = support(f);
  for (const auto& [a, b] : supp.intervals()) {
    std::vector<Rational> probes{(a + b) / 2};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (a < pts[i].x && pts[i].x < b) probes.push_back(pts[i].x);
      if (i + 1 < pts.size()) {
        const Rational lo = std::max(a, pts[i].x);
        const Rational hi = std::min(b, pts[i + 1].x);
        if (lo < hi) probes.push_back((lo + hi) / 2);
      }
    }
    const int expected = (f.evaluate(probes.front()) - probes.front()).sign();
    if (expected == 0) return false;
    for (const auto& x : probes) {
      if ((f.evaluate(x) - x).sign() != expected) return false;
    }
  }
  return true;
}

io::Json special_element_certificate(const PLMap& f, long p, long q, const Rational& r,
                                     bool right_based) {
  io::Json cert;
  const Membership mem = is_member(f, GroupSpec::f23());
  cert["member"] = mem.member;
  if (!mem.member) {
    cert["diagnosis"] = mem.diagnosis;
    return cert;
  }
  const AbVector m = chi_endpoints(f);
  const AbVector expected = right_based ? AbVector{{0, 0, p, q}} : AbVector{{p, q, 0, 0}};
  cert["chi_values"] = m == expected;
  const auto [lambda, rho] = lambda_rho(f);
  cert["other_endpoint_trivial"] = right_based ? lambda.is_zero() : rho.is_zero();
  const IntervalSet supp = support(f);
  cert["support_covers"] = right_based ? supp.covers(Rational(1) - r, 1) : supp.covers(0, r);
  cert["sign_constant"] = sign_constant_on_support(f);
  cert["support"] = io::to_json(supp);
  return cert;
}

io::Json stable_letter_certificate(const PLMap& t, long a, long b) {
  io::Json cert;
  cert["member"] = is_member(t, GroupSpec::f23()).member;
  const Character chi = Rational(a) * Character::chi02() + Rational(b) * Character::chi03();
  cert["chi_zero"] = char_eval(chi, t).is_zero();
  cert["lambda_negative"] = logcoord_sign(lambda_rho(t).first) < 0;
  cert["support_contains_0_3_4"] = support(t).covers(0, Rational(3, 4));
  cert["moves_half_left"] = t.evaluate(Rational(1, 2)) < Rational(1, 2);
  return cert;
}

SuiteResult basis_suite() {
  const auto basis = witness_basis();
  io::Json matrix = io::Json::array();
  std::array<std::array<std::int64_t, 4>, 4> mat{};
  bool members = true;
  for (std::size_t i = 0; i < 4; ++i) {
    members = members && is_member(basis[i], GroupSpec::f23()).member;
    const AbVector v = ab(basis[i]);
    mat[i] = v.m;
    matrix.push_back(io::to_json(v));
  }
  // Determinant by cofactor expansion over permutations.
  std::array<int, 4> perm{0, 1, 2, 3};
  std::int64_t det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    }
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < 4; ++i) term *= mat[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  bool diagonal = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) diagonal = diagonal && ((mat[i][j] != 0) == (i == j));
  }
  SuiteResult out;
  out.report["suite"] = "basis";
  out.report["ab_matrix"] = std::move(matrix);
  out.report["determinant"] = det;
  out.report["members"] = members;
  out.report["each_character_only_on_own_witness"] = diagonal;
  out.ok = members && diagonal && (det == 1 || det == -1);
  out.report["ok"] = out.ok;
  return out;
}

SuiteResult special_element_suite() {
  std::size_t cases = 0;
  io::Json failures = io::Json::array();
  for (long p = -4; p <= 4; ++p) {
    for (long q = -4; q <= 4; ++q) {
      if (p == 0 && q == 0) continue;
      for (const Rational& r : kRadii) {
        for (bool right : {false, true}) {
          ++cases;
          const PLMap f = right ? special_element_right(p, q, r) : special_element(p, q, r);
          const io::Json cert = special_element_certificate(f, p, q, r, right);
          if (!all_true(cert)) {
            failures.push_back({{"p", p}, {"q", q}, {"r", r.str()}, {"right", right}, {"certificate", cert}});
          }
        }
      }
    }
  }
  SuiteResult out;
  out.ok = failures.empty();
  out.report["suite"] = "lemma32";
  out.report["cases"] = cases;
  out.report["failures"] = std::move(failures);
  out.report["ok"] = out.ok;
  return out;
}

SuiteResult conjugator_suite(std::uint64_t seed, std::size_t samples) {
  const PLMap c = conjugator_half();
  const GroupSpec big = GroupSpec::f23_on(-1, 1);
  io::Json failures = io::Json::array();
  bool conj_ok = is_member(c, big).member && c.evaluate(0) == Rational(1, 2) &&
                 c.evaluate(1) == Rational(1) && c.evaluate(-1) == Rational(-1);
  for (std::size_t k = 0; k < samples; ++k) {
    const PLMap g = random_element(seed * 1000003 + k);
    const PLMap moved = conjugate(c, extend(g, -1, 1));
    const bool ok = is_member(moved, big).member && support(moved).within(Rational(1, 2), 1) &&
                    support(moved) == image(c, support(g));
    if (!ok) failures.push_back({{"sample", k}, {"element", io::to_json(g)}});
  }
  SuiteResult out;
  out.ok = conj_ok && failures.empty();
  out.report["suite"] = "lemma24";
  out.report["conjugator"] = io::to_json(c);
  out.report["conjugator_maps_unit_onto_upper_half"] = conj_ok;
  out.report["samples"] = samples;
  out.report["failures"] = std::move(failures);
  out.report["ok"] = out.ok;
  return out;
}

SuiteResult hnn_suite(std::uint64_t seed, std::size_t samples) {
  io::Json cases = io::Json::array();
  bool ok = true;
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
      const HnnCertificate cert = verify_hnn(a, b, samples, seed);
      ok = ok && cert.all();
      io::Json entry = io::to_json(cert);
      entry.erase("t");
      io::Json row{{"a", a}, {"b", b}};
      row.update(entry);
      cases.push_back(std::move(row));
    }
  }
  SuiteResult out;
  out.ok = ok;
  out.report["suite"] = "lemma41";
  out.report["cases"] = std::move(cases);
  out.report["ok"] = ok;
  return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t samples) {
  if (name == "basis") return basis_suite();
  if (name == "lemma32") return special_element_suite();
  if (name == "lemma24") return conjugator_suite(seed, samples);
  if (name == "lemma41") return hnn_suite(seed, samples);
  if (name == "all") {
    SuiteResult out;
    out.ok = true;
    out.report["seed"] = seed;
    out.report["samples"] = samples;
    io::Json suites = io::Json::array();
    for (const char* s : {"basis", "lemma32", "lemma24", "lemma41"}) {
      SuiteResult r = run_suite(s, seed, samples);
      out.ok = out.ok && r.ok;
      suites.push_back(std::move(r.report));
    }
    out.report["suites"] = std::move(suites);
    out.report["ok"] = out.ok;
    return out;
  }
  throw DomainError("unknown verification suite \"" + name + "\"");
}

}  // namespace steinlab::verify
