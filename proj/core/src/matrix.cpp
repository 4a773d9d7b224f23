#include "projsymp/matrix.hpp"

#include "projsymp/error.hpp"

namespace projsymp {

RationalMatrix RationalMatrix::identity(size_t n) {
  RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) fail(ErrorKind::DomainError, "ragged rows in matrix");
    for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return RationalMatrix();
  RationalMatrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) fail(ErrorKind::DomainError, "ragged columns in matrix");
    for (size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::DomainError, "matrix product shape mismatch");
  RationalMatrix m(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return m;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) fail(ErrorKind::DomainError, "matrix apply shape mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

size_t RationalMatrix::rank() const { return rref().rank; }

MatrixEchelon RationalMatrix::rref() const {
  MatrixEchelon e;
  e.reduced = *this;
  RationalMatrix& m = e.reduced;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pivot = row;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    Rational inv = m.at(row, col).reciprocal();
    for (size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  MatrixEchelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = Rational(1);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = -e.reduced.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) fail(ErrorKind::DomainError, "solve shape mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  MatrixEchelon e = aug.rref();
  for (size_t c : e.pivot_cols) {
    if (c == cols_) return std::nullopt;  // pivot in the augmented column
  }
  std::vector<Rational> x(cols_, Rational(0));
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x[e.pivot_cols[r]] = e.reduced.at(r, cols_);
  }
  return x;
}

}  // namespace projsymp
