#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rlp/wavefunctions.hpp"
#include "test_util.hpp"

using rlp::ErrorCode;
using rlp::SpectralInput;

namespace {

rlp::ValidatedSpectrum pt(int n) {
  SpectralInput in;
  for (int k = 1; k <= n; ++k) in.kappas.push_back(k);
  return rlp::validate(in);
}

rlp::ValidatedSpectrum unit_constant() {
  SpectralInput in;
  in.kappas = {1.0};
  in.norming = rlp::NormingConstants{{std::sqrt(2.0)}};
  return rlp::validate(in);
}

// Overlap integrals of all pairs by composite Simpson on [-40/k1, 40/k1].
std::vector<std::vector<double>> overlaps(const rlp::WavefunctionSet& set, std::size_t panels) {
  const std::size_t n = set.size();
  const double extent = 40.0 / set.spectrum().kappa(0);
  const double h = 2.0 * extent / static_cast<double>(panels);
  std::vector<std::vector<double>> acc(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i <= panels; ++i) {
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const auto psi = set.evaluate(-extent + h * static_cast<double>(i));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) acc[a][b] += w * psi[a] * psi[b];
  }
  for (auto& row : acc)
    for (auto& v : row) v *= h / 3.0;
  return acc;
}

}  // namespace

TEST_CASE("matrix A for a single level") {
  const auto s = unit_constant();
  CHECK(rlp::matrix_A(s, 0.0)(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rlp::matrix_A(s, 30.0)(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_ERROR_CODE(rlp::matrix_A(s, -400.0), ErrorCode::OverflowRange);
}

TEST_CASE("matrix A is symmetric") {
  SpectralInput in;
  in.kappas = {0.4, 1.3, 2.2, 3.0};
  in.norming = rlp::NormingConstants{{0.7, 2.0, 5.0, 1.1}};
  const auto a = rlp::matrix_A(rlp::validate(in), 0.35);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(a(i, j) == a(j, i));
}

TEST_CASE("single level wavefunction in closed form") {
  const auto s = unit_constant();
  for (double x : {-6.0, -1.0, 0.0, 0.5, 3.0, 20.0}) {
    CHECK(rlp::eval_psi(s, 1, x) ==
          doctest::Approx(1.0 / (std::sqrt(2.0) * std::cosh(x))).epsilon(1e-13));
  }
  CHECK(rlp::eval_psi(s, 1, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  for (double x = -3.0; x <= 3.0; x += 0.25) CHECK(rlp::schrodinger_residual(s, 1, x) < 1e-6);
}

TEST_CASE("index and energy access") {
  const rlp::WavefunctionSet set(pt(3));
  CHECK(set.size() == 3);
  CHECK(set.energy(1) == -1.0);
  CHECK(set.energy(3) == -9.0);
  CHECK_ERROR_CODE(set.psi(0, 0.0), ErrorCode::IndexOutOfRange);
  CHECK_ERROR_CODE(set.psi(4, 0.0), ErrorCode::IndexOutOfRange);
  CHECK_ERROR_CODE(rlp::eval_psi(pt(2), 3, 0.0), ErrorCode::IndexOutOfRange);
  const auto all = set.evaluate(0.4);
  for (int n = 1; n <= 3; ++n) CHECK(set.psi(n, 0.4) == doctest::Approx(all[n - 1]));
}

TEST_CASE("orthonormality") {
  for (int n = 1; n <= 6; ++n) {
    const auto ov = overlaps(rlp::WavefunctionSet(pt(n)), 100000);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const double want = a == b ? 1.0 : 0.0;
        CHECK(std::abs(ov[a][b] - want) < (a == b ? 1e-6 : 1e-5));
      }
    }
  }
  SpectralInput in;
  in.kappas = {0.6, 1.7, 2.1};
  in.norming = rlp::NormingConstants{{0.3, 4.0, 9.0}};
  const auto ov = overlaps(rlp::WavefunctionSet(rlp::validate(in)), 100000);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(std::abs(ov[a][b] - (a == b ? 1.0 : 0.0)) < 1e-5);
}

TEST_CASE("node counts follow decay rate") {
  for (int n = 1; n <= 5; ++n) {
    const rlp::WavefunctionSet set(pt(n));
    std::vector<std::vector<double>> samples(static_cast<std::size_t>(n));
    for (double x = -12.0; x <= 12.0; x += 1e-3) {
      const auto psi = set.evaluate(x);
      for (int m = 0; m < n; ++m) samples[m].push_back(psi[m]);
    }
    for (int m = 0; m < n; ++m) CHECK(oracle::sign_changes(samples[m], 1e-12) == n - (m + 1));
  }
}

TEST_CASE("Jost normalization at the right tail") {
  for (const auto& s : {pt(4), pt(2)}) {
    const rlp::WavefunctionSet set(s);
    const auto c = rlp::norming_constants(s);
    for (std::size_t n = 1; n <= s.size(); ++n) {
      const double k = s.kappa(n - 1);
      const double x = 30.0 / k;
      const double tail = set.psi(static_cast<int>(n), x) * std::exp(k * x);
      CHECK(oracle::rel_err(tail, c[n - 1]) < 1e-4);
    }
  }
}

TEST_CASE("Schrodinger residual for four levels") {
  const rlp::WavefunctionSet set(pt(4));
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (double x = -3.0; x <= 3.0; x += 0.05) worst = std::max(worst, set.residual(n, x));
  CHECK(worst < 1e-5);
  CHECK(set.residual(1, 60.0) < 1e-12);
}

TEST_CASE("far tails stay finite and decay at rate kappa_n") {
  const auto s = pt(6);
  const rlp::WavefunctionSet set(s);
  for (double x : {-45.0, 45.0}) {
    for (double v : set.evaluate(x)) {
      CHECK(std::isfinite(v));
      CHECK(std::abs(v) < 1e-15);
    }
  }
  // Corrections to the pure exponential tail are O(e^{-2 kappa_1 |x|}).
  for (double x : {-20.0, 20.0}) {
    const auto here = set.evaluate(x);
    const auto next = set.evaluate(x + (x > 0 ? 1.0 : -1.0));
    for (std::size_t n = 0; n < here.size(); ++n) {
      CHECK(std::abs(here[n]) < 1e-6);
      CHECK(oracle::rel_err(std::abs(next[n] / here[n]), std::exp(-s.kappa(n))) < 1e-8);
    }
  }
}
