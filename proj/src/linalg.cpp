#include "nfund/linalg.hpp"

#include <algorithm>
#include <utility>

#include "nfund/error.hpp"

namespace nfund {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) {
    throw Error(errc::invalid_input, "matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = Rational(1);
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.at(c, r) = at(r, c);
    }
  }
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) {
    throw Error(errc::invalid_input, "vector length does not match matrix columns");
  }
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) {
        acc += at(r, c) * v[c];
      }
    }
    out[r] = acc;
  }
  return out;
}

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) {
      ++sel;
    }
    if (sel == m.rows()) {
      continue;
    }
    if (sel != row) {
      for (std::size_t c = col; c < m.cols(); ++c) {
        std::swap(m.at(sel, c), m.at(row, c));
      }
    }
    const Rational pivot = m.at(row, col);
    m.at(row, col) = Rational(1);
    for (std::size_t c = col + 1; c < m.cols(); ++c) {
      if (!m.at(row, c).is_zero()) {
        m.at(row, c) /= pivot;
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) {
        continue;
      }
      const Rational factor = m.at(r, col);
      m.at(r, col) = Rational(0);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) {
          m.at(r, c) -= factor * m.at(row, c);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t mat_rank(const Matrix& m) {
  return rref(m).pivot_cols.size();
}

std::vector<Vec> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : e.pivot_cols) {
    is_pivot[pc] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    Vec v(m.cols(), Rational(0));
    v[f] = Rational(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      v[e.pivot_cols[k]] = -e.reduced.at(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_consistent(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) {
    throw Error(errc::invalid_input, "right-hand side length does not match rows");
  }
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      aug.at(r, c) = m.at(r, c);
    }
    aug.at(r, m.cols()) = b[r];
  }
  const Echelon e = rref(std::move(aug));
  for (std::size_t pc : e.pivot_cols) {
    if (pc == m.cols()) {
      return std::nullopt;  // pivot in the augmented column: inconsistent
    }
  }
  Vec x(m.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    x[e.pivot_cols[k]] = e.reduced.at(k, m.cols());
  }
  return x;
}

}  // namespace nfund
