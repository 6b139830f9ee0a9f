#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rlp/naive_oracle.hpp"
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

rlp::ValidatedSpectrum random_spectrum(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> sd(-0.5, 0.5);
  SpectralInput in;
  in.kappas = oracle::random_ascending(rng, n, 0.3, 2.5, 0.1);
  std::vector<double> sh(n);
  for (auto& v : sh) v = sd(rng);
  in.norming = rlp::Shifts{sh};
  return rlp::validate(in);
}

}  // namespace

TEST_CASE("assembly of small cases") {
  const auto one = rlp::assemble(pt(1), 0.0);
  CHECK(one.entries.rows() == 1);
  CHECK(one.entries(0, 0) == doctest::Approx(2.0));
  CHECK(one.x == 0.0);
  CHECK(rlp::naive_tau(pt(1), 0.0) == doctest::Approx(2.0));

  const auto two = rlp::assemble(pt(2), 0.0).entries;
  CHECK(two(0, 0) == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(two(1, 1) == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(two(0, 1) == doctest::Approx(2.0 * std::sqrt(6.0) / 3.0).epsilon(1e-14));
  CHECK(two(1, 0) == doctest::Approx(2.0 * std::sqrt(6.0) / 3.0).epsilon(1e-14));
  CHECK(rlp::naive_tau(pt(2), 0.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("off-diagonal entries carry the column exponential") {
  SpectralInput in;
  in.kappas = {1.0, 3.0};
  in.norming = rlp::Shifts{{0.2, -0.1}};
  const auto s = rlp::validate(in);
  const double x = 0.7;
  const auto m = rlp::assemble(s, x).entries;
  const double c = 2.0 * std::sqrt(3.0) / 4.0;
  CHECK(m(0, 1) == doctest::Approx(c * std::exp(-3.0 * (x + 0.1))).epsilon(1e-14));
  CHECK(m(1, 0) == doctest::Approx(c * std::exp(-1.0 * (x - 0.2))).epsilon(1e-14));
}

TEST_CASE("four level determinant equals the expansion") {
  const auto s = pt(4);
  const auto e = rlp::build_expansion(s);
  for (double x : {-1.0, 0.0, 0.5}) {
    CHECK(oracle::rel_err(rlp::naive_log_tau(s, x), rlp::eval_tau(e, x).log_tau) < 1e-12);
  }
}

TEST_CASE("literal permutation sum matches LU") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= rlp::max_literal_size; ++n) {
    const auto s = random_spectrum(rng, n);
    const double lu = rlp::naive_tau(s, 0.3);
    const double perm = rlp::naive_tau(s, 0.3, rlp::DetMethod::PermutationSum);
    CHECK(oracle::rel_err(perm, lu) < 1e-10);
    CHECK(lu > 0.0);
  }
  CHECK_ERROR_CODE(rlp::naive_tau(pt(9), 0.0, rlp::DetMethod::PermutationSum), ErrorCode::SizeLimit);
  CHECK_NOTHROW(rlp::naive_tau(pt(9), 0.0));
}

TEST_CASE("double and quad working precision") {
  const auto s = pt(3);
  for (double x : {-2.0, -0.5, 0.0, 1.5}) {
    for (auto method : {rlp::DetMethod::Lu, rlp::DetMethod::PermutationSum}) {
      const double quad = rlp::naive_log_tau(s, x, method);
      const double dbl = rlp::naive_log_tau(s, x, method, rlp::Precision::Double);
      CHECK(std::abs(quad - dbl) < 1e-12 * std::max(1.0, std::abs(quad)));
    }
  }
  // Below the shifts an eight-level determinant cancels most double digits;
  // the quad route must still match the expansion there.
  const auto eight = pt(8);
  const auto e = rlp::build_expansion(eight);
  const double want = rlp::eval_potential(e, -1.0);
  CHECK(std::abs(rlp::naive_potential(eight, -1.0, 1e-3, rlp::Differencing::Richardson) - want) <
        1e-6);
}

TEST_CASE("guards") {
  CHECK_ERROR_CODE(rlp::assemble(pt(2), 400.0), ErrorCode::OverflowRange);
  CHECK_ERROR_CODE(rlp::naive_tau(pt(13), 0.0), ErrorCode::SizeLimit);
  CHECK_ERROR_CODE(rlp::naive_potential(pt(2), 0.0, 1e-6), ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(rlp::naive_potential(pt(2), 0.0, 0.1), ErrorCode::InvalidParameter);
}

TEST_CASE("finite-difference potential") {
  CHECK(std::abs(rlp::naive_potential(pt(4), 0.0, 1e-4) + 20.0) < 5e-6);
  CHECK(std::abs(rlp::naive_potential(pt(1), 0.0, 1e-4) + 2.0) < 5e-7);
  CHECK(std::abs(rlp::naive_potential(pt(4), 0.0, 1e-3, rlp::Differencing::Richardson) + 20.0) <
        1e-7);
}

TEST_CASE("finite-difference potential tracks the expansion") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> xd(-2.0, 2.0);
  const double h = 1e-4;
  const double tol = std::max(1e-6, h * h * 1e3);
  for (int rep = 0; rep < 24; ++rep) {
    const auto s = random_spectrum(rng, 1 + rep % 8);
    const auto e = rlp::build_expansion(s);
    const double x = xd(rng);
    CHECK(std::abs(rlp::naive_potential(s, x, h) - rlp::eval_potential(e, x)) < tol);
  }
}

TEST_CASE("Jacobi derivatives agree with the expansion") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> xd(-3.0, 3.0);
  for (int rep = 0; rep < 40; ++rep) {
    const auto s = random_spectrum(rng, 1 + rep % 8);
    const auto e = rlp::build_expansion(s);
    const double x = xd(rng);
    const auto jac = rlp::naive_log_derivatives(s, x);
    const auto tv = rlp::eval_tau(e, x);
    CHECK(std::abs(jac.d1 - tv.d1) < 1e-9 * std::max(1.0, std::abs(tv.d1)));
    const double second = tv.d2 - tv.d1 * tv.d1;
    CHECK(std::abs(jac.d2 - second) < 1e-8 * std::max(1.0, std::abs(second)));
  }
}

TEST_CASE("benchmark report shape") {
  const std::vector<int> ns{1, 2, 8, 9, 13};
  const auto report = rlp::benchmark(ns, 20);
  REQUIRE(report.rows.size() == ns.size());
  CHECK(report.points == 20);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto& r = report.rows[i];
    CHECK(r.n == ns[i]);
    CHECK(r.terms == (std::size_t{1} << (ns[i] - 1)));
    CHECK(r.expansion_ns > 0.0);
    CHECK((r.naive_lu_ns >= 0.0) == (ns[i] <= 12));
    CHECK((r.naive_laplace_ns >= 0.0) == (ns[i] <= 8));
    if (ns[i] <= 8) CHECK(r.max_abs_diff < 1e-6);
  }
  CHECK_ERROR_CODE(rlp::benchmark(std::vector<int>{25}, 10), ErrorCode::SizeLimit);
  CHECK_ERROR_CODE(rlp::benchmark(std::vector<int>{0}, 10), ErrorCode::SizeLimit);
  CHECK_ERROR_CODE(rlp::benchmark(std::vector<int>{3}, 0), ErrorCode::InvalidParameter);
}
