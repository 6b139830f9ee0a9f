#include "rlp/alternant.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rlp/dense_lu.hpp"
#include "rlp/errors.hpp"

namespace rlp {

namespace {

constexpr std::size_t direct_product_limit = 16;

void check_ascending(std::span<const double> kappas) {
  for (std::size_t i = 0; i + 1 < kappas.size(); ++i) {
    if (kappas[i + 1] == kappas[i]) {
      throw Error(ErrorCode::DegenerateGap,
                  "repeated kappa at positions " + std::to_string(i) + "," + std::to_string(i + 1));
    }
    if (kappas[i + 1] < kappas[i]) {
      throw Error(ErrorCode::NonAscendingSpectrum,
                  "kappa subset not ascending at position " + std::to_string(i));
    }
  }
}

double log_ratio(double lo, double hi) { return std::log((hi - lo) / (hi + lo)); }

}  // namespace

double log_alternant_product(std::span<const double> kappas) {
  check_ascending(kappas);
  double acc = 0.0;
  for (std::size_t j = 1; j < kappas.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) acc += 2.0 * log_ratio(kappas[i], kappas[j]);
  }
  return acc;
}

double alternant_product(std::span<const double> kappas) {
  if (kappas.size() > direct_product_limit) return std::exp(log_alternant_product(kappas));
  check_ascending(kappas);
  double prod = 1.0;
  for (std::size_t j = 1; j < kappas.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double r = (kappas[j] - kappas[i]) / (kappas[j] + kappas[i]);
      prod *= r * r;
    }
  }
  return prod;
}

Matrix alternant_matrix(std::span<const double> kappas) {
  const std::size_t n = kappas.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 2.0 * std::sqrt(kappas[i] * kappas[j]) / (kappas[i] + kappas[j]);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

double alternant_det_oracle(std::span<const double> kappas) {
  if (kappas.size() > max_oracle_size) {
    throw Error(ErrorCode::SizeLimit, "determinant oracle limited to " +
                                          std::to_string(max_oracle_size) + " values, got " +
                                          std::to_string(kappas.size()));
  }
  // Elimination cancels roughly log10(1/D) digits, which reaches 40 for
  // close-lying kappas, so the entries are formed and reduced at 100 digits.
  using Big = boost::multiprecision::cpp_bin_float_100;
  const std::size_t n = kappas.size();
  std::vector<Big> a(n * n, Big(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Big ki(kappas[i]), kj(kappas[j]);
      a[i * n + j] = 2 * sqrt(ki * kj) / (ki + kj);
    }
  }
  return static_cast<double>(dense::Lu<Big>(std::move(a), n).determinant());
}

double vandermonde(std::span<const double> qs) {
  double prod = 1.0;
  for (std::size_t j = 1; j < qs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) prod *= qs[j] - qs[i];
  }
  return prod;
}

AlternantLogTable::AlternantLogTable(std::span<const double> kappas)
    : n_(kappas.size()), pairs_(kappas.size() * kappas.size(), 0.0) {
  if (n_ > 32) {
    throw Error(ErrorCode::SizeLimit, "alternant table supports at most 32 values");
  }
  check_ascending(kappas);
  for (std::size_t j = 1; j < n_; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double v = 2.0 * log_ratio(kappas[i], kappas[j]);
      pairs_[i * n_ + j] = v;
      pairs_[j * n_ + i] = v;
    }
  }
}

double AlternantLogTable::log_product(std::uint32_t mask) const {
  double acc = 0.0;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    const double* row = pairs_.data() + i * n_;
    // Only pairs (i, j) with j > i, so each pair is counted once.
    for (std::uint32_t higher = rest & (rest - 1); higher != 0; higher &= higher - 1) {
      acc += row[std::countr_zero(higher)];
    }
  }
  return acc;
}

}  // namespace rlp
