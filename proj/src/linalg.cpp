#include "rlp/linalg.hpp"

#include <string>

#include "rlp/errors.hpp"

namespace rlp {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

dense::Lu<double> LuFactorization::factor(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, "LU factorization needs a square matrix, got " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  return dense::Lu<double>(m.data(), m.rows());
}

LuFactorization::LuFactorization(Matrix m) : lu_(factor(m)) {}

double LuFactorization::determinant() const { return lu_.determinant(); }

double LuFactorization::log_abs_determinant() const { return lu_.log_abs_determinant(); }

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
  if (rhs.size() != size()) {
    throw Error(ErrorCode::LengthMismatch, "right-hand side length " + std::to_string(rhs.size()) +
                                               " does not match system size " +
                                               std::to_string(size()));
  }
  return lu_.solve(std::vector<double>(rhs.begin(), rhs.end()));
}

double generic_det(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, "determinant of a non-square " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) return 1.0;
  return LuFactorization(m).determinant();
}

double permutation_sum_det(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  }
  if (m.rows() > max_permutation_size) {
    throw Error(ErrorCode::SizeLimit, "permutation-sum determinant limited to n <= " +
                                          std::to_string(max_permutation_size));
  }
  return dense::permutation_sum(m.data(), m.rows());
}

}  // namespace rlp
