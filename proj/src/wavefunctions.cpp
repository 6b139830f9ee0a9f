#include "rlp/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rlp/errors.hpp"

namespace rlp {

namespace {

// ln C_n from the shift representation: C_n^2 = 2 k_n exp(2 k_n x_n).
std::vector<double> log_norming(const ValidatedSpectrum& s) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = 0.5 * std::log(2.0 * s.kappa(i)) + s.kappa(i) * s.shift(i);
  }
  return out;
}

}  // namespace

Matrix matrix_A(const ValidatedSpectrum& spectrum, double x) {
  const std::size_t n = spectrum.size();
  const std::vector<double> log_c = log_norming(spectrum);
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double log_l = log_c[i] - spectrum.kappa(i) * x;
    if (std::abs(log_l) > 350.0) {
      throw Error(ErrorCode::OverflowRange, "Lambda_" + std::to_string(i + 1) +
                                                " out of range at x=" + std::to_string(x));
    }
    lambda[i] = std::exp(log_l);
  }
  Matrix a(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      a(m, k) = (m == k ? 1.0 : 0.0) +
                lambda[m] * lambda[k] / (spectrum.kappa(m) + spectrum.kappa(k));
    }
  }
  return a;
}

WavefunctionSet::WavefunctionSet(ValidatedSpectrum spectrum)
    : spectrum_(std::move(spectrum)),
      expansion_(build_expansion(spectrum_)),
      log_norm_(log_norming(spectrum_)) {}

std::vector<double> WavefunctionSet::evaluate(double x) const {
  const std::size_t n = spectrum_.size();
  std::vector<double> s(n), t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double log_l = log_norm_[i] - spectrum_.kappa(i) * x;
    s[i] = std::exp(-std::max(log_l, 0.0));
    t[i] = std::exp(std::min(log_l, 0.0));
  }
  Matrix m(n, n);
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = t[i] * t[j] / (spectrum_.kappa(i) + spectrum_.kappa(j));
    }
    m(i, i) += s[i] * s[i];
    rhs[i] = -t[i];
  }
  const std::vector<double> z = LuFactorization(std::move(m)).solve(rhs);
  std::vector<double> psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    psi[i] = -s[i] * z[i];
    if (!std::isfinite(psi[i])) {
      throw Error(ErrorCode::OverflowRange, "wavefunction not finite at x=" + std::to_string(x));
    }
  }
  return psi;
}

void WavefunctionSet::check_index(int n) const {
  if (n < 1 || static_cast<std::size_t>(n) > spectrum_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "state index " + std::to_string(n) +
                                                " outside 1.." + std::to_string(spectrum_.size()));
  }
}

double WavefunctionSet::psi(int n, double x) const {
  check_index(n);
  return evaluate(x)[static_cast<std::size_t>(n - 1)];
}

double WavefunctionSet::energy(int n) const {
  check_index(n);
  const double k = spectrum_.kappa(static_cast<std::size_t>(n - 1));
  return -spectrum_.c_phys() * k * k;
}

double WavefunctionSet::residual(int n, double x, double h) const {
  check_index(n);
  const auto f = [&](double at) { return psi(n, at); };
  const double f0 = f(x);
  const double second =
      (-f(x + 2 * h) + 16 * f(x + h) - 30 * f0 + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
  const double c = spectrum_.c_phys();
  const double v = eval_potential(expansion_, x);
  return std::abs(second - (v - energy(n)) / c * f0);
}

double eval_psi(const ValidatedSpectrum& spectrum, int n, double x) {
  return WavefunctionSet(spectrum).psi(n, x);
}

double schrodinger_residual(const ValidatedSpectrum& spectrum, int n, double x) {
  return WavefunctionSet(spectrum).residual(n, x);
}

}  // namespace rlp
