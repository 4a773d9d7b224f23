#ifndef PROJSYMP_MATRIX_HPP
#define PROJSYMP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "projsymp/rational.hpp"

namespace projsymp {

struct MatrixEchelon;

/// Dense row-major matrix over Rational. Rank, kernel and solve are exact;
/// reduction uses reduced row echelon form with the deterministic pivot rule
/// "first nonzero entry, scanning rows top-down in column order", so results
/// are bit-reproducible.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  MatrixEchelon rref() const;
  size_t rank() const;

  /// Exact basis of the right kernel; empty iff the matrix is injective.
  std::vector<std::vector<Rational>> kernel_basis() const;

  /// One exact solution of A x = b with free variables set to zero, or
  /// nullopt when the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct MatrixEchelon {
  RationalMatrix reduced;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
};

}  // namespace projsymp

#endif
