#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rlp/dense_lu.hpp"

namespace rlp {

// Dense row-major real matrix. Just enough for the small determinants and
// solves this library needs (N <= a few dozen).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// LU factorization with row pivoting, PA = LU.
class LuFactorization {
 public:
  explicit LuFactorization(Matrix m);

  std::size_t size() const noexcept { return lu_.size(); }
  bool singular() const noexcept { return lu_.singular(); }

  double determinant() const;
  // ln|det| and sign(det) separately, so huge determinants stay representable.
  double log_abs_determinant() const;
  int sign() const noexcept { return lu_.sign(); }

  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  static dense::Lu<double> factor(const Matrix& m);

  dense::Lu<double> lu_;
};

// Throws NotSquare.
double generic_det(const Matrix& m);

// Literal sum over all n! permutations. Throws NotSquare, and SizeLimit for
// n > max_permutation_size.
inline constexpr std::size_t max_permutation_size = 10;
double permutation_sum_det(const Matrix& m);

}  // namespace rlp
