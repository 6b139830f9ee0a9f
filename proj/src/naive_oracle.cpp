#include "rlp/naive_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include <boost/multiprecision/float128.hpp>

#include "rlp/dense_lu.hpp"
#include "rlp/errors.hpp"
#include "rlp/tau_engine.hpp"

namespace rlp {

namespace {

void check_exponents(const ValidatedSpectrum& s, double x) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double u = s.kappa(i) * (x - s.shift(i));
    if (!(std::abs(u) < max_naive_exponent)) {
      throw Error(ErrorCode::OverflowRange, "|kappa_i (x - x_i)| >= " +
                                                std::to_string(max_naive_exponent) +
                                                " for state " + std::to_string(i));
    }
  }
}

void check_size(const ValidatedSpectrum& s, DetMethod method) {
  const std::size_t limit = method == DetMethod::Lu ? max_naive_size : max_literal_size;
  if (s.size() > limit) {
    throw Error(ErrorCode::SizeLimit, std::string(method == DetMethod::Lu ? "LU" : "literal") +
                                          " naive determinant limited to N <= " +
                                          std::to_string(limit) + ", got " +
                                          std::to_string(s.size()));
  }
}

// Near x << 0 the matrix is a Cauchy matrix plus a small diagonal, so its
// determinant cancels about log10(1/D) digits. Quad precision keeps N <= 12
// well inside the differencing budget.
using Quad = boost::multiprecision::float128;

template <class T>
T offdiag(T ki, T kj) {
  using std::sqrt;
  return 2 * sqrt(ki * kj) / (ki + kj);
}

// Row-major entries. The exponents are formed in T so rounding u_j to
// double does not limit the second difference.
template <class T>
std::vector<T> entries(const ValidatedSpectrum& s, double x) {
  using std::exp;
  check_exponents(s, x);
  const std::size_t n = s.size();
  std::vector<T> a(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const T kj = s.kappa(j);
    const T uj = kj * (static_cast<T>(x) - static_cast<T>(s.shift(j)));
    const T decay = exp(-uj);
    for (std::size_t i = 0; i < n; ++i) {
      a[i * n + j] = i == j ? exp(uj) + decay : offdiag<T>(s.kappa(i), kj) * decay;
    }
  }
  return a;
}

template <class T>
double log_det(const ValidatedSpectrum& s, double x, DetMethod method) {
  using std::abs;
  using std::log;
  const std::size_t n = s.size();
  std::vector<T> a = entries<T>(s, x);
  if (method == DetMethod::Lu) {
    const dense::Lu<T> lu(std::move(a), n);
    return lu.sign() > 0 ? static_cast<double>(lu.log_abs_determinant()) : NAN;
  }
  // Row-scale before the literal sum so no single product overflows.
  T log_scale = 0;
  for (std::size_t i = 0; i < n; ++i) {
    T big = 0;
    for (std::size_t j = 0; j < n; ++j) big = std::max(big, T(abs(a[i * n + j])));
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] /= big;
    log_scale += log(big);
  }
  const T det = dense::permutation_sum(a, n);
  return det > 0 ? static_cast<double>(log_scale + log(det)) : NAN;
}

}  // namespace

AssembledMatrix assemble(const ValidatedSpectrum& spectrum, double x) {
  const std::size_t n = spectrum.size();
  const std::vector<Quad> a = entries<Quad>(spectrum, x);
  AssembledMatrix out{Matrix(n, n), x};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.entries(i, j) = static_cast<double>(a[i * n + j]);
  }
  return out;
}

double naive_log_tau(const ValidatedSpectrum& spectrum, double x, DetMethod method,
                     Precision precision) {
  check_size(spectrum, method);
  return precision == Precision::Quad ? log_det<Quad>(spectrum, x, method)
                                      : log_det<double>(spectrum, x, method);
}

double naive_tau(const ValidatedSpectrum& spectrum, double x, DetMethod method,
                 Precision precision) {
  return std::exp(naive_log_tau(spectrum, x, method, precision));
}

double naive_potential(const ValidatedSpectrum& spectrum, double x, double h, Differencing mode,
                       DetMethod method, Precision precision) {
  if (!(h >= 1e-5 && h <= 1e-2)) {
    throw Error(ErrorCode::InvalidParameter, "finite-difference step must lie in [1e-5, 1e-2]");
  }
  auto log_tau = [&](double at) { return naive_log_tau(spectrum, at, method, precision); };
  const double c = spectrum.c_phys();
  const double l0 = log_tau(x);
  const double d_h = (log_tau(x + h) - 2.0 * l0 + log_tau(x - h)) / (h * h);
  if (mode == Differencing::Central) return -2.0 * c * d_h;
  const double d_2h = (log_tau(x + 2.0 * h) - 2.0 * l0 + log_tau(x - 2.0 * h)) / (4.0 * h * h);
  return -2.0 * c * (4.0 * d_h - d_2h) / 3.0;
}

LogDerivatives naive_log_derivatives(const ValidatedSpectrum& spectrum, double x) {
  check_size(spectrum, DetMethod::Lu);
  const std::size_t n = spectrum.size();
  std::vector<Quad> a = entries<Quad>(spectrum, x);
  // Column j of A depends on x only through u_j: diagonal entries are
  // 2 cosh(u_j), the rest are multiples of e^{-u_j}.
  std::vector<Quad> da(n * n), dda(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Quad kj = spectrum.kappa(j);
    const Quad uj = kj * (static_cast<Quad>(x) - static_cast<Quad>(spectrum.shift(j)));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t at = i * n + j;
      da[at] = i == j ? kj * (exp(uj) - exp(-uj)) : -kj * a[at];
      dda[at] = kj * kj * a[at];
    }
  }
  const dense::Lu<Quad> lu(std::move(a), n);
  // Columns of X = A^-1 A' and the trace of Y = A^-1 A''.
  std::vector<Quad> xm(n * n);
  Quad tr_y = 0;
  std::vector<Quad> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = da[i * n + j];
    const std::vector<Quad> xj = lu.solve(col);
    for (std::size_t i = 0; i < n; ++i) xm[i * n + j] = xj[i];
    for (std::size_t i = 0; i < n; ++i) col[i] = dda[i * n + j];
    tr_y += lu.solve(col)[j];
  }
  Quad tr_x = 0, tr_xx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tr_x += xm[i * n + i];
    for (std::size_t k = 0; k < n; ++k) tr_xx += xm[i * n + k] * xm[k * n + i];
  }
  return {static_cast<double>(tr_x), static_cast<double>(tr_y - tr_xx)};
}

namespace {

template <class F>
double time_per_point(std::span<const double> xs, F&& f, double& sink) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  for (double x : xs) sink += f(x);
  const auto stop = clock::now();
  const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
  return ns / static_cast<double>(xs.size());
}

}  // namespace

BenchmarkReport benchmark(std::span<const int> n_range, int points) {
  if (points < 1) throw Error(ErrorCode::InvalidParameter, "benchmark needs at least one point");
  BenchmarkReport report;
  report.points = points;
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    xs[static_cast<std::size_t>(i)] =
        points == 1 ? 0.0
                    : report.grid_min + (report.grid_max - report.grid_min) * i / (points - 1);
  }

  constexpr double h = 1e-3;
  double sink = 0.0;
  for (int n : n_range) {
    if (n < 1 || static_cast<std::size_t>(n) > max_expansion_size) {
      throw Error(ErrorCode::SizeLimit, "benchmark N must lie in [1, " +
                                            std::to_string(max_expansion_size) + "], got " +
                                            std::to_string(n));
    }
    SpectralInput in;
    for (int k = 1; k <= n; ++k) in.kappas.push_back(k);
    const ValidatedSpectrum s = validate(in);

    BenchmarkRow row;
    row.n = n;
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const TauExpansion e = build_expansion(s);
    row.build_ns = std::chrono::duration<double, std::nano>(clock::now() - t0).count();
    row.terms = e.size();
    row.expansion_ns = time_per_point(xs, [&](double x) { return eval_potential(e, x); }, sink);

    if (static_cast<std::size_t>(n) <= max_naive_size) {
      row.naive_lu_ns = time_per_point(
          xs,
          [&](double x) {
            return naive_potential(s, x, h, Differencing::Richardson, DetMethod::Lu,
                                   Precision::Double);
          },
          sink);
      double worst = 0.0;
      for (double x : xs) {
        const double diff = std::abs(eval_potential(e, x) -
                                     naive_potential(s, x, h, Differencing::Richardson));
        worst = std::max(worst, diff);
      }
      row.max_abs_diff = worst;
    }
    if (static_cast<std::size_t>(n) <= max_literal_size) {
      row.naive_laplace_ns = time_per_point(
          xs,
          [&](double x) {
            return naive_potential(s, x, h, Differencing::Richardson, DetMethod::PermutationSum,
                                   Precision::Double);
          },
          sink);
    }
    report.rows.push_back(row);
  }
  // Keeps the timed loops from being optimized away.
  [[maybe_unused]] volatile double observed = sink;
  return report;
}

}  // namespace rlp
