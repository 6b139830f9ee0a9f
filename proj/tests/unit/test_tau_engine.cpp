#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rlp/tau_engine.hpp"
#include "test_util.hpp"

using rlp::ErrorCode;
using rlp::SpectralInput;

namespace {

rlp::ValidatedSpectrum pt(int n) {
  SpectralInput in;
  for (int k = 1; k <= n; ++k) in.kappas.push_back(k);
  return rlp::validate(in);
}

rlp::ValidatedSpectrum with_shifts(std::vector<double> k, std::vector<double> x) {
  SpectralInput in;
  in.kappas = std::move(k);
  in.norming = rlp::Shifts{std::move(x)};
  return rlp::validate(in);
}

double oracle_log_det(const rlp::ValidatedSpectrum& s, double x) {
  const std::vector<double> k(s.kappas().begin(), s.kappas().end());
  const std::vector<double> sh(s.shifts().begin(), s.shifts().end());
  return static_cast<double>(
      log(oracle::cofactor_det(oracle::tau_matrix<oracle::Big>(k, sh, x))));
}

}  // namespace

TEST_CASE("single level expansion") {
  const auto e = rlp::build_expansion(pt(1));
  REQUIRE(e.size() == 1);
  const auto& t = e.terms()[0];
  CHECK(t.slope == 1.0);
  CHECK(t.offset == doctest::Approx(0.0));
  CHECK(t.coeff_log == doctest::Approx(0.0));
  CHECK(t.minus_indices().empty());

  const auto v = rlp::eval_tau(e, 0.0);
  CHECK(v.d1 == doctest::Approx(0.0));
  CHECK(v.d2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rlp::eval_potential(e, 0.0) == doctest::Approx(-2.0).epsilon(1e-14));
  for (double x : {-3.0, -0.4, 1.7}) {
    CHECK(rlp::eval_potential(e, x) == doctest::Approx(-2.0 / std::pow(std::cosh(x), 2)));
  }
}

TEST_CASE("two level expansion by hand") {
  const auto s = pt(2);
  const auto e = rlp::build_expansion(s);
  REQUIRE(e.size() == 2);
  CHECK(e.terms()[0].slope == 3.0);
  CHECK(e.terms()[1].slope == 1.0);
  CHECK(e.terms()[1].minus_indices() == std::vector<int>{1});
  CHECK(std::exp(e.terms()[0].coeff_log) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::exp(e.terms()[1].coeff_log) == doctest::Approx(1.0).epsilon(1e-14));
  for (const auto& t : e.terms()) CHECK(std::abs(t.offset) < 1e-14);
  CHECK(std::exp(rlp::eval_tau(e, 0.0).log_tau) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(oracle_log_det(s, 0.0) - std::log(8.0 / 3.0)) < 1e-14);

  const auto merged = rlp::merged_amplitudes(e);
  REQUIRE(merged.size() == 2);
  CHECK(merged[1].second == doctest::Approx(3.0).epsilon(1e-13));
  // Closed form of the two-level well.
  for (double x : {-1.3, 0.0, 0.6, 2.2}) {
    const double den = std::cosh(3 * x) + 3 * std::cosh(x);
    const double num1 = 3 * std::sinh(3 * x) + 3 * std::sinh(x);
    const double num2 = 9 * std::cosh(3 * x) + 3 * std::cosh(x);
    const double v = -2.0 * (num2 / den - std::pow(num1 / den, 2));
    CHECK(rlp::eval_potential(e, x) == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("four level amplitudes merged by slope") {
  const auto e = rlp::build_expansion(pt(4));
  REQUIRE(e.size() == 8);
  const std::map<double, double> want{{10, 1}, {8, 10}, {6, 45}, {4, 120}, {2, 210}, {0, 126}};
  const auto merged = rlp::merged_amplitudes(e);
  REQUIRE(merged.size() == want.size());
  for (const auto& [slope, amp] : merged) {
    REQUIRE(want.count(slope) == 1);
    CHECK(oracle::rel_err(amp, want.at(slope)) < 1e-12);
  }
}

TEST_CASE("four level closed forms") {
  const auto e = rlp::build_expansion(pt(4));
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    const auto v = rlp::eval_tau(e, x);
    CHECK(std::abs(v.d1 - 10.0 * std::tanh(x)) < 1e-10);
    CHECK(std::abs(rlp::eval_potential(e, x) + 20.0 / std::pow(std::cosh(x), 2)) < 1e-9);
  }
  CHECK(rlp::eval_potential(e, 0.0) == doctest::Approx(-20.0).epsilon(1e-14));
}

TEST_CASE("depth of the sech-squared family") {
  for (int n = 1; n <= 6; ++n) {
    const double v0 = rlp::eval_potential(rlp::build_expansion(pt(n)), 0.0);
    CHECK(std::abs(v0 + n * (n + 1)) < 1e-8);
  }
}

TEST_CASE("term structure") {
  for (int n = 1; n <= 20; ++n) {
    SpectralInput in;
    for (int k = 1; k <= n; ++k) in.kappas.push_back(0.5 + 0.25 * k);
    in.norming = rlp::Shifts{std::vector<double>(n, 0.0)};
    const auto e = rlp::build_expansion(rlp::validate(in));
    REQUIRE(e.size() == (std::size_t{1} << (n - 1)));
    if (n > 12) continue;
    double total = 0.0;
    for (double k : in.kappas) total += k;
    CHECK(e.terms()[0].minus_mask == 0u);
    CHECK(e.terms()[0].slope == doctest::Approx(total));
    const std::uint32_t full = (1u << n) - 1u;
    std::set<std::uint32_t> seen;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto& t = e.terms()[i];
      CHECK(std::isfinite(t.coeff_log));
      CHECK(2 * __builtin_popcount(t.minus_mask) <= n);
      CHECK(seen.count(full & ~t.minus_mask) == 0);
      seen.insert(t.minus_mask);
      if (i > 0) CHECK(t.slope <= e.terms()[i - 1].slope);
      if (2 * __builtin_popcount(t.minus_mask) == n) CHECK((t.minus_mask & 1u) == 1u);
    }
  }
}

TEST_CASE("size limit") {
  SpectralInput in;
  for (std::size_t k = 1; k <= rlp::max_expansion_size + 1; ++k) in.kappas.push_back(k);
  in.norming = rlp::Shifts{std::vector<double>(in.kappas.size(), 0.0)};
  CHECK_ERROR_CODE(rlp::build_expansion(rlp::validate(in)), ErrorCode::SizeLimit);
}

TEST_CASE("symmetric spectra give even potentials") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    SpectralInput in;
    in.kappas = oracle::random_ascending(rng, 1 + rep % 6, 0.3, 4.0, 0.05);
    const auto e = rlp::build_expansion(rlp::validate(in));
    for (const auto& t : e.terms()) CHECK(std::abs(t.offset) < 1e-10);
    for (double x = 0.1; x < 6.0; x += 0.7) {
      CHECK(std::abs(rlp::eval_potential(e, x) - rlp::eval_potential(e, -x)) < 1e-10);
      CHECK(std::abs(rlp::eval_tau(e, x).d1 + rlp::eval_tau(e, -x).d1) < 1e-12);
    }
  }
}

TEST_CASE("stable at large arguments") {
  const auto e = rlp::build_expansion(pt(6));
  for (double x = -50.0; x <= 50.0; x += 0.5) {
    const auto v = rlp::eval_tau(e, x);
    CHECK(std::isfinite(v.log_tau));
    CHECK(std::isfinite(v.d1));
    CHECK(std::isfinite(v.d2));
    CHECK(std::isfinite(rlp::eval_potential(e, x)));
  }
  CHECK(std::abs(rlp::eval_potential(e, 30.0)) < 1e-6);
  CHECK(std::abs(rlp::eval_potential(e, -30.0)) < 1e-6);
}

TEST_CASE("expansion equals the determinant for general norming") {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> sd(-1.0, 1.0), xd(-3.0, 3.0);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const auto k = oracle::random_ascending(rng, n, 0.2, 3.0, 0.05);
    std::vector<double> sh(n);
    for (auto& v : sh) v = sd(rng);
    const auto s = with_shifts(k, sh);
    const auto e = rlp::build_expansion(s);
    for (int p = 0; p < 3; ++p) {
      const double x = xd(rng);
      const double want = oracle_log_det(s, x);
      CHECK(std::abs(rlp::eval_tau(e, x).log_tau - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("derivatives match finite differences of log tau") {
  const auto s = with_shifts({0.4, 1.1, 1.9}, {0.3, -0.7, 0.2});
  const auto e = rlp::build_expansion(s);
  const double h = 1e-4;
  for (double x : {-2.0, 0.0, 0.8}) {
    const auto v = rlp::eval_tau(e, x);
    const double lp = rlp::eval_tau(e, x + h).log_tau, lm = rlp::eval_tau(e, x - h).log_tau;
    CHECK(std::abs((lp - lm) / (2 * h) - v.d1) < 1e-7);
    const double second = (lp - 2 * v.log_tau + lm) / (h * h);
    CHECK(std::abs(second - (v.d2 - v.d1 * v.d1)) < 1e-5);
  }
}

TEST_CASE("scaling the kinetic prefactor scales V") {
  const auto s = pt(3);
  const auto e1 = rlp::build_expansion(s);
  const auto e2 = rlp::build_expansion(s.with_c_phys(2.5));
  CHECK(rlp::eval_potential(e2, 0.3) == doctest::Approx(2.5 * rlp::eval_potential(e1, 0.3)));
}

TEST_CASE("sampling") {
  const auto e = rlp::build_expansion(pt(4));
  const auto grid = rlp::uniform_grid(-5.0, 5.0, 0.01);
  CHECK(grid.size() == 1001);
  CHECK(grid.back() == doctest::Approx(5.0));
  const auto curve = rlp::sample_potential(e, grid);
  REQUIRE(curve.vs.size() == grid.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(curve.vs[i] + 20.0 / std::pow(std::cosh(grid[i]), 2)));
  }
  CHECK(worst < 1e-9);

  const std::vector<double> single{0.0};
  CHECK(rlp::sample_potential(e, single).vs.size() == 1);
  CHECK_ERROR_CODE(rlp::sample_potential(e, std::vector<double>{}), ErrorCode::EmptyGrid);
  CHECK_ERROR_CODE(rlp::sample_potential(e, std::vector<double>{1.0, 0.0}),
                   ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(rlp::sample_potential(e, std::vector<double>{0.0, NAN}),
                   ErrorCode::InvalidParameter);
}
