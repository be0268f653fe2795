#ifndef FANOLINE_MATRIX_HPP
#define FANOLINE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fanoline/rational.hpp"

namespace fanoline {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalVector apply(const RationalVector& v) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {v : m v = 0}, one vector per free column, in increasing column order.
std::vector<RationalVector> kernel(const RationalMatrix& m);
/// Throws DomainError when m is not square and invertible.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace fanoline

#endif  // FANOLINE_MATRIX_HPP
