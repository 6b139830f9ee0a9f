#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rlp/linalg.hpp"

namespace rlp {

// The structured determinant D(k_1..k_n): unit diagonal and off-diagonal
// entries 2 sqrt(k_i k_j) / (k_i + k_j). Subsets must be strictly
// ascending; the empty and singleton subsets have D = 1.

// Closed form prod_{i<j} ((k_j - k_i)/(k_j + k_i))^2. Accumulated in the log
// domain for n > 16. Throws DegenerateGap on repeated values and
// NonAscendingSpectrum on descending input.
double alternant_product(std::span<const double> kappas);

// ln D via the same product, always in the log domain.
double log_alternant_product(std::span<const double> kappas);

// The matrix whose determinant is D.
Matrix alternant_matrix(std::span<const double> kappas);

// Numerical determinant of alternant_matrix by pivoted LU in 100-digit
// arithmetic, rounded to double. Throws SizeLimit when n > max_oracle_size.
inline constexpr std::size_t max_oracle_size = 12;
double alternant_det_oracle(std::span<const double> kappas);

// prod_{i<j} (q_j - q_i).
double vandermonde(std::span<const double> qs);

// Pairwise log factors 2 ln((k_j - k_i)/(k_j + k_i)) for a fixed spectrum, so
// ln D of any subset (given as a bitmask over spectrum indices) is a sum of
// table entries. Supports up to 32 values.
class AlternantLogTable {
 public:
  explicit AlternantLogTable(std::span<const double> kappas);

  std::size_t size() const noexcept { return n_; }
  double pair(std::size_t i, std::size_t j) const { return pairs_[i * n_ + j]; }
  double log_product(std::uint32_t mask) const;

 private:
  std::size_t n_;
  std::vector<double> pairs_;
};

}  // namespace rlp
