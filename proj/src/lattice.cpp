#include "steinlab/lattice.hpp"

#include <utility>

namespace steinlab {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Replaces columns (i, j) of m by (x*ci + y*cj, s*ci + t*cj).
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& x,
                     const BigInt& y, const BigInt& s, const BigInt& t) {
  for (auto& row : m) {
    BigInt ci = row[i];
    BigInt cj = row[j];
    row[i] = x * ci + y * cj;
    row[j] = s * ci + t * cj;
  }
}

void negate_column(IntMatrix& m, std::size_t i) {
  for (auto& row : m) row[i] = -row[i];
}

// Replaces rows (i, j) of m by (x*ri + y*rj, s*ri + t*rj).
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& x, const BigInt& y,
                  const BigInt& s, const BigInt& t) {
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    BigInt ri = m[i][k];
    BigInt rj = m[j][k];
    m[i][k] = x * ri + y * rj;
    m[j][k] = s * ri + t * rj;
  }
}

// g = x*a + y*b with g = gcd(a, b) >= 0.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ColumnHermite column_hermite(const IntMatrix& a, std::size_t columns) {
  ColumnHermite out;
  out.hermite = a;
  out.transform = identity(columns);
  IntMatrix& h = out.hermite;
  IntMatrix& u = out.transform;
  std::size_t rank = 0;
  for (std::size_t row = 0; row < h.size() && rank < columns; ++row) {
    for (std::size_t j = rank + 1; j < columns; ++j) {
      if (h[row][j] == 0) continue;
      BigInt g, x, y;
      const BigInt pa = h[row][rank];
      const BigInt pb = h[row][j];
      extended_gcd(pa, pb, g, x, y);
      const BigInt s = -pb / g;
      const BigInt t = pa / g;
      combine_columns(h, rank, j, x, y, s, t);
      combine_columns(u, rank, j, x, y, s, t);
    }
    if (h[row][rank] == 0) continue;
    if (h[row][rank] < 0) {
      negate_column(h, rank);
      negate_column(u, rank);
    }
    // Reduce entries left of the pivot modulo the pivot.
    for (std::size_t j = 0; j < rank; ++j) {
      const BigInt q = floor_div(h[row][j], h[row][rank]);
      if (q == 0) continue;
      for (auto* m : {&h, &u}) {
        for (auto& r : *m) r[j] -= q * r[rank];
      }
    }
    out.pivot_rows.push_back(row);
    ++rank;
  }
  out.rank = rank;
  return out;
}

IntMatrix row_hermite(const IntMatrix& rows, std::size_t columns) {
  IntMatrix m = rows;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      BigInt g, x, y;
      const BigInt pa = m[rank][col];
      const BigInt pb = m[i][col];
      extended_gcd(pa, pb, g, x, y);
      combine_rows(m, rank, i, x, y, -pb / g, pa / g);
    }
    if (m[rank][col] == 0) continue;
    if (m[rank][col] < 0) {
      for (auto& e : m[rank]) e = -e;
    }
    for (std::size_t i = 0; i < rank; ++i) {
      const BigInt q = floor_div(m[i][col], m[rank][col]);
      if (q == 0) continue;
      for (std::size_t k = 0; k < columns; ++k) m[i][k] -= q * m[rank][k];
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns) {
  const ColumnHermite ch = column_hermite(a, columns);
  IntMatrix basis;
  for (std::size_t j = ch.rank; j < columns; ++j) {
    IntVector v;
    for (std::size_t i = 0; i < columns; ++i) v.push_back(ch.transform[i][j]);
    basis.push_back(std::move(v));
  }
  return row_hermite(basis, columns);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b,
                                       std::size_t columns) {
  const ColumnHermite ch = column_hermite(a, columns);
  const IntMatrix& h = ch.hermite;
  IntVector y(columns, 0);
  for (std::size_t k = 0; k < ch.rank; ++k) {
    const std::size_t row = ch.pivot_rows[k];
    BigInt rest = b[row];
    for (std::size_t j = 0; j < k; ++j) rest -= h[row][j] * y[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), h[row][k].get_mpz_t())) return std::nullopt;
    y[k] = rest / h[row][k];
  }
  for (std::size_t row = 0; row < h.size(); ++row) {
    BigInt lhs = 0;
    for (std::size_t j = 0; j < ch.rank; ++j) lhs += h[row][j] * y[j];
    if (lhs != b[row]) return std::nullopt;
  }
  IntVector x(columns, 0);
  for (std::size_t i = 0; i < columns; ++i) {
    for (std::size_t j = 0; j < ch.rank; ++j) x[i] += ch.transform[i][j] * y[j];
  }
  return x;
}

IntMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows) {
  IntMatrix out;
  for (const auto& row : rows) {
    BigInt l = 1;
    for (const Rational& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    IntVector r;
    for (const Rational& q : row) r.push_back(q.num() * (l / q.den()));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace steinlab
