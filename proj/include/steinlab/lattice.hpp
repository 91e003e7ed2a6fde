#pragma once

// Integer linear algebra over Z: Hermite normal forms, integer kernels and
// integer solutions of linear systems.

#include "steinlab/rational.hpp"

#include <optional>
#include <vector>

namespace steinlab {

using IntVector = std::vector<BigInt>;
/// Row-major dense integer matrix. All rows have the same length.
using IntMatrix = std::vector<IntVector>;

/// Column-style Hermite decomposition: hermite == matrix * transform with
/// `transform` unimodular and `hermite` in column echelon form. The first
/// `rank` columns of `hermite` are nonzero with positive pivots in strictly
/// increasing rows; the remaining columns are zero.
struct ColumnHermite {
  IntMatrix hermite;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

ColumnHermite column_hermite(const IntMatrix& a, std::size_t columns);

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows are
/// dropped. Equal lattices give identical output.
IntMatrix row_hermite(const IntMatrix& rows, std::size_t columns);

/// Basis of {v in Z^n : a v = 0} in row Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns);

/// Some x in Z^n with a x == b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b,
                                       std::size_t columns);

/// Clears denominators row by row, so the integer matrix has the same kernel.
IntMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows);

}  // namespace steinlab
