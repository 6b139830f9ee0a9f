#include "rlp/tau_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "rlp/alternant.hpp"
#include "rlp/errors.hpp"

namespace rlp {

namespace {

// The T = {} term is the pair (a_{} = 1, a_{1..N} = D(all)); higher subsets
// follow the same pattern with both halves taken from the log table.
TauTerm make_term(const ValidatedSpectrum& s, const AlternantLogTable& table,
                  std::uint32_t minus_mask) {
  const std::size_t n = s.size();
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  const std::uint32_t plus_mask = full & ~minus_mask;

  const double log_a_minus_set = table.log_product(minus_mask);  // a_T
  const double log_a_plus_set = table.log_product(plus_mask);    // a_{T^c}

  double slope = 0.0;
  double shift_part = 0.0;  // sum_{l not in T} k_l x_l - sum_{l in T} k_l x_l
  for (std::size_t l = 0; l < n; ++l) {
    const double k = s.kappa(l);
    const double kx = k * s.shift(l);
    if (minus_mask & (1u << l)) {
      slope -= k;
      shift_part -= kx;
    } else {
      slope += k;
      shift_part += kx;
    }
  }

  TauTerm t;
  t.minus_mask = minus_mask;
  t.coeff_log = 0.5 * (log_a_minus_set + log_a_plus_set);
  t.slope = slope;
  t.offset = 0.5 * (log_a_minus_set - log_a_plus_set) - shift_part;
  return t;
}

bool is_canonical(std::uint32_t mask, std::size_t n) {
  const auto k = static_cast<std::size_t>(std::popcount(mask));
  if (2 * k < n) return true;
  // Exactly half: keep the member of {T, T^c} that contains index 1.
  return 2 * k == n && (mask & 1u);
}

}  // namespace

std::vector<int> TauTerm::minus_indices() const {
  std::vector<int> out;
  for (std::uint32_t rest = minus_mask; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

TauExpansion build_expansion(const ValidatedSpectrum& spectrum) {
  const std::size_t n = spectrum.size();
  if (n == 0 || n > max_expansion_size) {
    throw Error(ErrorCode::SizeLimit, "expansion supports 1 <= N <= " +
                                          std::to_string(max_expansion_size) + ", got N=" +
                                          std::to_string(n));
  }
  const AlternantLogTable table(spectrum.kappas());

  std::vector<TauTerm> terms;
  terms.reserve(std::size_t{1} << (n - 1));
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (is_canonical(mask, n)) terms.push_back(make_term(spectrum, table, mask));
  }
  std::sort(terms.begin(), terms.end(), [](const TauTerm& a, const TauTerm& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return a.minus_mask < b.minus_mask;
  });
  return TauExpansion(spectrum, std::move(terms));
}

namespace {

// Weighted moments of the 2^N exponentials exp(w_k + s_k x), shifted by the
// largest exponent and centered on that exponent's slope.
struct Moments {
  double log_scale;  // largest exponent
  double center;     // slope of the largest exponent
  double m0;         // sum of shifted weights
  double m1;         // sum of weights * (s - center)
  double m2;         // sum of weights * (s - center)^2
};

Moments moments(const TauExpansion& e, double x) {
  double top = -INFINITY;
  double center = 0.0;
  for (const TauTerm& t : e.terms()) {
    const double arg = t.slope * x + t.offset;
    const double hi = t.coeff_log + std::abs(arg);
    if (hi > top) {
      top = hi;
      center = arg >= 0.0 ? t.slope : -t.slope;
    }
  }
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (const TauTerm& t : e.terms()) {
    const double arg = t.slope * x + t.offset;
    const double wp = std::exp(t.coeff_log + arg - top);
    const double wm = std::exp(t.coeff_log - arg - top);
    const double dp = t.slope - center;
    const double dm = -t.slope - center;
    m0 += wp + wm;
    m1 += wp * dp + wm * dm;
    m2 += wp * dp * dp + wm * dm * dm;
  }
  return {top, center, m0, m1, m2};
}

}  // namespace

TauValue eval_tau(const TauExpansion& expansion, double x) {
  const Moments m = moments(expansion, x);
  const double mean_offset = m.m1 / m.m0;
  const double second = m.m2 / m.m0;
  TauValue v;
  v.log_tau = m.log_scale + std::log(m.m0);
  v.d1 = m.center + mean_offset;
  v.d2 = second + 2.0 * m.center * mean_offset + m.center * m.center;
  return v;
}

double eval_potential(const TauExpansion& expansion, double x) {
  const Moments m = moments(expansion, x);
  const double mean_offset = m.m1 / m.m0;
  // Variance of the slope distribution; centering keeps the subtraction benign.
  const double variance = m.m2 / m.m0 - mean_offset * mean_offset;
  return -2.0 * expansion.spectrum().c_phys() * variance;
}

PotentialCurve sample_potential(const TauExpansion& expansion, std::span<const double> grid) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "potential grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) {
      throw Error(ErrorCode::InvalidParameter, "grid point " + std::to_string(i) + " not finite");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::InvalidParameter, "grid must be strictly ascending");
    }
  }
  PotentialCurve curve;
  curve.c_phys = expansion.spectrum().c_phys();
  curve.xs.assign(grid.begin(), grid.end());
  curve.vs.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) curve.vs[i] = eval_potential(expansion, grid[i]);
  return curve;
}

std::vector<std::pair<double, double>> merged_amplitudes(const TauExpansion& expansion,
                                                         double slope_tolerance) {
  std::vector<std::pair<double, double>> raw;
  raw.reserve(expansion.size());
  const double lead = expansion.terms().front().coeff_log;
  for (const TauTerm& t : expansion.terms()) {
    raw.emplace_back(std::abs(t.slope), std::exp(t.coeff_log - lead));
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<std::pair<double, double>> merged;
  for (const auto& [slope, amp] : raw) {
    if (!merged.empty() && std::abs(merged.back().first - slope) <= slope_tolerance) {
      merged.back().second += amp;
    } else {
      merged.emplace_back(slope, amp);
    }
  }
  return merged;
}

std::vector<double> uniform_grid(double min, double max, double step) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) {
    throw Error(ErrorCode::InvalidParameter, "grid bounds and step must be finite");
  }
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidParameter, "grid step must be positive");
  if (max < min) throw Error(ErrorCode::InvalidParameter, "grid max must not be below min");
  const double span = (max - min) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-6)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = min + static_cast<double>(i) * step;
  return grid;
}

}  // namespace rlp
