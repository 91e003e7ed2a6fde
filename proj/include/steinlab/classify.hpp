#pragma once

// Decision procedures for the Sigma-invariants of F_{2,3} and the finiteness
// properties of its normal subgroups.

#include "steinlab/lattice.hpp"
#include "steinlab/stein.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steinlab {

enum class SigmaTier { NotInSigma1 = 0, Sigma1NotSigma2 = 1, SigmaInfinity = 2 };

std::string to_string(SigmaTier tier);

/// Tier of [chi] in the character sphere. Throws DomainError for chi = 0.
SigmaTier classify_character(const Character& chi);

/// Subgroup of Z^4, given by generators (order irrelevant, may be empty).
struct LatticeSubgroup {
  std::vector<std::array<BigInt, 4>> generators;

  static LatticeSubgroup from_ab(const std::vector<AbVector>& vs);
  /// Row Hermite normal form basis; identical for equal subgroups.
  LatticeSubgroup canonical() const;
};

/// Integer basis of the abelianization image of ker(chi).
LatticeSubgroup kernel_lattice(const Character& chi);

/// Coefficients (a, b) >= 0, not both zero, with (a lambda + b rho)(N) = 0.
/// Normalized to coprime integers when a/b is rational.
struct Obstruction {
  LogCoord a;
  LogCoord b;
};

struct FinitenessReport {
  bool fg = false;
  bool fp = false;
  bool f_infinity = false;
  std::optional<Obstruction> obstruction;
};

/// Finiteness of the normal subgroup N with abelianization image `lattice`.
/// N must be nontrivial; then N contains [F_{2,3}, F_{2,3}].
FinitenessReport normal_subgroup_finiteness(const LatticeSubgroup& lattice);

/// Finiteness of ker(chi); throws DomainError for chi = 0.
FinitenessReport kernel_finiteness(const Character& chi);

/// Finiteness of the normal closure of `elems` in F_{2,3}. Throws
/// DomainError when every element is the identity.
FinitenessReport normal_closure_classification(const std::vector<PLMap>& elems);

/// Machine-checked data for ker(a chi_0^2 + b chi_0^3) = F_{2,3}[1/2,1] *_t.
struct HnnCertificate {
  PLMap t = PLMap::identity(0, 1);
  bool chi_zero = false;
  bool lambda_negative = false;
  bool base_mapped_in = false;
  bool intersection_trivial = false;
  bool proper = false;
  std::size_t samples = 0;

  bool all() const {
    return chi_zero && lambda_negative && base_mapped_in && intersection_trivial && proper;
  }
};

/// Random element of F_{2,3}[0,1] built from special elements, for sampling.
PLMap random_element(std::uint64_t seed, std::size_t max_word_length = 3);

/// Builds the stable letter for (a, b) and checks the ascending HNN
/// conditions on `sample_size` seeded random base elements.
HnnCertificate verify_hnn(long a, long b, std::size_t sample_size, std::uint64_t seed = 0);

}  // namespace steinlab
