#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rlp/linalg.hpp"
#include "rlp/spectral_core.hpp"

namespace rlp {

// The matrix A~_N = B~_N + C~_N at a point x. Diagonal entries are
// e^{u_i} + e^{-u_i}; entry (i, j), i != j, is
// 2 sqrt(k_i k_j)/(k_i + k_j) e^{-u_j}, with u_i = k_i (x - x_i).
struct AssembledMatrix {
  Matrix entries;
  double x = 0.0;
};

inline constexpr double max_naive_exponent = 300.0;
inline constexpr std::size_t max_naive_size = 12;
inline constexpr std::size_t max_literal_size = 8;

// Throws OverflowRange when some |k_i (x - x_i)| >= 300.
AssembledMatrix assemble(const ValidatedSpectrum& spectrum, double x);

enum class DetMethod {
  Lu,              // pivoted LU, O(N^3)
  PermutationSum,  // literal N!-term sum, N <= 8
};

// Working precision of the determinant. For x well below the shifts the
// determinant cancels about log10(1/D) digits, with D the alternant product,
// so double is only trustworthy for small N. Quad is the default.
enum class Precision {
  Quad,
  Double,
};

// det(A~_N). Throws as assemble, and SizeLimit past N = 12 (N = 8 for the
// literal method). The log form does not overflow for large determinants.
double naive_tau(const ValidatedSpectrum& spectrum, double x, DetMethod method = DetMethod::Lu,
                 Precision precision = Precision::Quad);
double naive_log_tau(const ValidatedSpectrum& spectrum, double x,
                     DetMethod method = DetMethod::Lu, Precision precision = Precision::Quad);

enum class Differencing {
  Central,     // (L(x+h) - 2L(x) + L(x-h)) / h^2
  Richardson,  // central at h and 2h, combined to O(h^4)
};

// -2C d^2/dx^2 ln det(A~_N) by finite differences. h must lie in
// [1e-5, 1e-2].
double naive_potential(const ValidatedSpectrum& spectrum, double x, double h = 1e-4,
                       Differencing mode = Differencing::Central,
                       DetMethod method = DetMethod::Lu,
                       Precision precision = Precision::Quad);

// First and second derivatives of ln det(A~_N), in quad precision, from
// Jacobi's formula with analytic entry derivatives: tr(A^-1 A') and tr(A^-1 A'') - tr((A^-1 A')^2).
struct LogDerivatives {
  double d1;
  double d2;
};
LogDerivatives naive_log_derivatives(const ValidatedSpectrum& spectrum, double x);

struct BenchmarkRow {
  int n = 0;
  double build_ns = 0.0;          // expansion construction, once
  double expansion_ns = 0.0;      // per point
  double naive_lu_ns = -1.0;      // per point; < 0 when not measured
  double naive_laplace_ns = -1.0; // per point; < 0 when not measured
  std::size_t terms = 0;
  double max_abs_diff = -1.0;     // expansion vs naive LU; < 0 when not measured
};

struct BenchmarkReport {
  int points = 0;
  double grid_min = -1.0;
  double grid_max = 1.0;
  std::vector<BenchmarkRow> rows;
};

// Times per-point potential evaluation on the pt:N spectra (kappa = 1..N,
// symmetric) over `points` evenly spaced x in [-1, 1]. The naive columns
// use Richardson differencing with h = 1e-3 in double precision, so both
// sides are timed in the same arithmetic, and are measured only for N <= 12
// (LU) and N <= 8 (literal). max_abs_diff compares against the quad LU route. Throws SizeLimit for N outside
// [1, max_expansion_size].
BenchmarkReport benchmark(std::span<const int> n_range, int points);

}  // namespace rlp
