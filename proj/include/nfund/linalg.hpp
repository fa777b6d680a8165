#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nfund/rational.hpp"

namespace nfund {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over Rational.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Matrix transposed() const;

  /// m . v; v must have cols() entries.
  Vec apply(const Vec& v) const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form via rational Gauss-Jordan elimination.
/// Pivot rule: scan columns left to right, take the first row with a
/// nonzero entry. Deterministic for a given entry layout.
Echelon rref(Matrix m);

/// Exact rank over the rationals.
std::size_t mat_rank(const Matrix& m);

/// Basis of the kernel {v : m.v = 0} in the reduced-echelon
/// parameterization, ordered by ascending free column. Size is
/// always cols - rank.
std::vector<Vec> nullspace(const Matrix& m);

/// One exact solution of m.x = b when the system is consistent, with
/// free variables set to zero under the fixed column order; nullopt when
/// inconsistent. Throws invalid_input on dimension mismatch.
std::optional<Vec> solve_consistent(const Matrix& m, const Vec& b);

}  // namespace nfund
