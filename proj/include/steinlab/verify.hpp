#pragma once

// Certificate suites: each check is recomputed from the built maps with the
// membership, character and support routines, never taken from the builder.

#include "steinlab/io.hpp"

#include <cstdint>
#include <string>

namespace steinlab::verify {

struct SuiteResult {
  io::Json report;
  bool ok = false;
};

/// Postconditions of a special element built for (p, q, r).
io::Json special_element_certificate(const PLMap& f, long p, long q, const Rational& r,
                                     bool right_based);
/// Postconditions of stable_letter(a, b).
io::Json stable_letter_certificate(const PLMap& t, long a, long b);

/// sign(f(x) - x) is constant on each support component, checked at every
/// breakpoint and piece midpoint inside it.
bool sign_constant_on_support(const PLMap& f);

SuiteResult basis_suite();
SuiteResult special_element_suite();
SuiteResult conjugator_suite(std::uint64_t seed, std::size_t samples);
SuiteResult hnn_suite(std::uint64_t seed, std::size_t samples);

/// Runs "basis", "lemma32", "lemma24", "lemma41" or "all".
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t samples);

}  // namespace steinlab::verify
