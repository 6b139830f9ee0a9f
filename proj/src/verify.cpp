#include "rlp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rlp/errors.hpp"

namespace rlp {

namespace {

using cplx = std::complex<double>;

constexpr double decay_threshold = 1e-10;
constexpr double rescale_limit = 1e150;

double grid_step(const PotentialCurve& curve) {
  const std::size_t n = curve.xs.size();
  if (n < 3 || curve.vs.size() != n) {
    throw Error(ErrorCode::InvalidParameter, "curve needs at least 3 aligned samples");
  }
  const double h = (curve.xs.back() - curve.xs.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw Error(ErrorCode::NonUniformGrid, "curve grid is not ascending");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(curve.xs[i] - curve.xs[i - 1] - h) > 1e-6 * h) {
      throw Error(ErrorCode::NonUniformGrid,
                  "curve grid spacing is not uniform at index " + std::to_string(i));
    }
  }
  return h;
}

void check_decay(const PotentialCurve& curve) {
  if (std::abs(curve.vs.front()) > decay_threshold || std::abs(curve.vs.back()) > decay_threshold) {
    throw Error(ErrorCode::InsufficientDecay, "potential has not decayed below 1e-10 at the edges");
  }
}

// Numerov weights g_i = 1 - h^2 f_i / 12 with f = (V - E) / C.
std::vector<double> numerov_weights(const PotentialCurve& curve, double energy, double h) {
  std::vector<double> g(curve.vs.size());
  const double scale = h * h / (12.0 * curve.c_phys);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = 1.0 - scale * (curve.vs[i] - energy);
  return g;
}

// Phase per step of a discrete free wave for the recurrence with constant
// weight g: cos(theta) = (6 - 5 g) / g.
double discrete_phase(double g) { return std::acos(std::clamp((6.0 - 5.0 * g) / g, -1.0, 1.0)); }

// Real Numerov sweep from one edge, carrying only the last three samples.
class RealSweep {
 public:
  RealSweep(const std::vector<double>& g, double energy, double c_phys, double h, bool from_left)
      : g_(g), step_(from_left ? 1 : -1) {
    const std::size_t n = g.size();
    index_ = from_left ? 1 : n - 2;
    const double q = std::sqrt(std::max(-energy, 0.0) / c_phys);
    prev_ = 1.0;
    cur_ = std::exp(q * h);
  }

  std::size_t index() const { return index_; }
  double prev() const { return prev_; }
  double current() const { return cur_; }
  int nodes() const { return nodes_; }

  // Returns the factor the carried samples were divided by (1 if none).
  double advance() {
    const std::size_t i = index_;
    const std::size_t next_i = i + step_;
    const std::size_t prev_i = i - step_;
    const double next = ((12.0 - 10.0 * g_[i]) * cur_ - g_[prev_i] * prev_) / g_[next_i];
    if ((cur_ < 0.0 && next > 0.0) || (cur_ > 0.0 && next < 0.0)) ++nodes_;
    prev_ = cur_;
    cur_ = next;
    index_ = next_i;
    const double mag = std::abs(cur_);
    if (mag > rescale_limit) {
      prev_ /= mag;
      cur_ /= mag;
      return mag;
    }
    return 1.0;
  }

 private:
  const std::vector<double>& g_;
  std::ptrdiff_t step_;
  std::size_t index_;
  double prev_;
  double cur_;
  int nodes_ = 0;
};

class Shooter {
 public:
  explicit Shooter(const PotentialCurve& curve) : curve_(curve), h_(grid_step(curve)) {
    const auto it = std::min_element(curve.vs.begin(), curve.vs.end());
    match_ = static_cast<std::size_t>(it - curve.vs.begin());
    match_ = std::clamp<std::size_t>(match_, 2, curve.vs.size() - 3);
    v_min_ = *it;
  }

  double v_min() const { return v_min_; }

  int node_count(double energy) const {
    const auto g = numerov_weights(curve_, energy, h_);
    RealSweep sweep(g, energy, curve_.c_phys, h_, true);
    while (sweep.index() + 1 < g.size()) sweep.advance();
    return sweep.nodes();
  }

  // Wronskian of the left- and right-started solutions at the matching
  // point, each normalized by a positive factor.
  double mismatch(double energy) const {
    const auto g = numerov_weights(curve_, energy, h_);
    RealSweep left(g, energy, curve_.c_phys, h_, true);
    while (left.index() < match_) left.advance();
    // prev at match_-1, current at match_; one more step reaches match_+1.
    double l_before = left.prev();
    l_before /= left.advance();
    const double lv = left.prev();
    const double ld = (left.current() - l_before) / (2.0 * h_);

    RealSweep right(g, energy, curve_.c_phys, h_, false);
    while (right.index() > match_) right.advance();
    double r_after = right.prev();
    r_after /= right.advance();
    const double rv = right.prev();
    const double rd = (r_after - right.current()) / (2.0 * h_);

    const double ln = std::max(std::abs(lv), std::abs(ld) * h_);
    const double rn = std::max(std::abs(rv), std::abs(rd) * h_);
    return (lv * rd - ld * rv) / (ln * rn);
  }

 private:
  const PotentialCurve& curve_;
  double h_;
  std::size_t match_ = 0;
  double v_min_ = 0.0;
};

}  // namespace

NumerovSolution numerov_integrate(const PotentialCurve& curve, double energy, Direction direction) {
  const double h = grid_step(curve);
  const std::size_t n = curve.xs.size();
  const auto g = numerov_weights(curve, energy, h);
  const bool from_left = direction == Direction::LeftToRight;

  NumerovSolution sol;
  sol.xs = curve.xs;
  sol.psi.assign(n, cplx{});
  const std::size_t first = from_left ? 0 : n - 1;
  const std::size_t second = from_left ? 1 : n - 2;
  if (energy < 0.0) {
    const double q = std::sqrt(-energy / curve.c_phys);
    sol.psi[first] = 1.0;
    sol.psi[second] = std::exp(q * h);
  } else if (energy > 0.0) {
    const double theta = discrete_phase(g[first]);
    // Right-moving in both directions: phase increases with x.
    const double sign = from_left ? 1.0 : -1.0;
    sol.psi[first] = std::polar(1.0, theta * static_cast<double>(first));
    sol.psi[second] = std::polar(1.0, theta * static_cast<double>(first) + sign * theta);
  } else {
    sol.psi[first] = 1.0;
    sol.psi[second] = 1.0;
  }

  auto step = [&](std::size_t prev, std::size_t cur, std::size_t next) {
    sol.psi[next] = ((12.0 - 10.0 * g[cur]) * sol.psi[cur] - g[prev] * sol.psi[prev]) / g[next];
    const double mag = std::abs(sol.psi[next]);
    if (mag > rescale_limit) {
      for (auto& v : sol.psi) v /= mag;
    }
  };
  if (from_left) {
    for (std::size_t i = 1; i + 1 < n; ++i) step(i - 1, i, i + 1);
  } else {
    for (std::size_t i = n - 2; i >= 1; --i) step(i + 1, i, i - 1);
  }
  return sol;
}

std::vector<double> bound_states(const PotentialCurve& curve, int count) {
  if (count < 1) throw Error(ErrorCode::InvalidParameter, "bound_states needs count >= 1");
  const Shooter shooter(curve);
  const double half_length = 0.5 * (curve.xs.back() - curve.xs.front());
  const double e_cut = -curve.c_phys * std::pow(4.0 / half_length, 2);
  const double e_floor = shooter.v_min();
  if (!(e_floor < e_cut)) {
    throw Error(ErrorCode::StateCountMismatch, "curve has no well below the cutoff energy");
  }
  const int total = shooter.node_count(e_cut);
  if (total != count) {
    throw Error(ErrorCode::StateCountMismatch, "found " + std::to_string(total) +
                                                   " bound states, expected " +
                                                   std::to_string(count));
  }

  std::vector<double> energies;
  energies.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double lo = e_floor, hi = e_cut;
    int c_lo = 0, c_hi = total;
    // Isolate the (k+1)-th level between node counts k and k+1.
    while (!(c_lo == k && c_hi == k + 1)) {
      const double mid = 0.5 * (lo + hi);
      const int c = shooter.node_count(mid);
      if (c <= k) {
        lo = mid;
        c_lo = c;
      } else {
        hi = mid;
        c_hi = c;
      }
      if (hi - lo < 1e-15 * std::abs(hi)) break;
    }
    double w_lo = shooter.mismatch(lo);
    const double w_hi = shooter.mismatch(hi);
    const bool use_mismatch = (w_lo < 0.0) != (w_hi < 0.0);
    for (int it = 0; it < 200 && hi - lo > 4e-16 * std::abs(hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      bool go_right;
      if (use_mismatch) {
        const double w = shooter.mismatch(mid);
        go_right = (w < 0.0) == (w_lo < 0.0);
        if (go_right) w_lo = w;
      } else {
        go_right = shooter.node_count(mid) <= k;
      }
      if (go_right) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    energies.push_back(0.5 * (lo + hi));
  }
  return energies;
}

double reflection_coefficient(const PotentialCurve& curve, double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidParameter, "wavenumber must be positive");
  check_decay(curve);
  const double energy = curve.c_phys * k * k;
  const NumerovSolution sol = numerov_integrate(curve, energy, Direction::RightToLeft);
  const double h = grid_step(curve);
  const auto g = numerov_weights(curve, energy, h);
  const cplx r = std::polar(1.0, discrete_phase(g.front()));
  // psi_j = A r^j + B r^-j for j = 0, 1.
  const cplx a = (sol.psi[1] - sol.psi[0] / r) / (r - 1.0 / r);
  const cplx b = sol.psi[0] - a;
  return std::abs(b) / std::abs(a);
}

std::pair<double, double> sum_rule(const PotentialCurve& curve, const ValidatedSpectrum& spectrum) {
  if (curve.xs.size() < 2 || curve.vs.size() != curve.xs.size()) {
    throw Error(ErrorCode::InvalidParameter, "sum rule needs at least 2 aligned samples");
  }
  check_decay(curve);
  double integral = 0.0;
  for (std::size_t i = 1; i < curve.xs.size(); ++i) {
    integral += 0.5 * (curve.vs[i] + curve.vs[i - 1]) * (curve.xs[i] - curve.xs[i - 1]);
  }
  double kappa_sum = 0.0;
  for (double k : spectrum.kappas()) kappa_sum += k;
  return {integral, -4.0 * spectrum.c_phys() * kappa_sum};
}

VerificationReport verify_reconstruction(const PotentialCurve& curve,
                                         const ValidatedSpectrum& spectrum,
                                         std::span<const double> ks) {
  VerificationReport report;
  const auto count = static_cast<int>(spectrum.size());
  report.recovered_energies = bound_states(curve, count);
  for (std::size_t i = spectrum.size(); i-- > 0;) {
    const double k = spectrum.kappa(i);
    report.target_energies.push_back(-spectrum.c_phys() * k * k);
  }
  for (std::size_t i = 0; i < report.target_energies.size(); ++i) {
    const double target = report.target_energies[i];
    const double rel = std::abs(report.recovered_energies[i] - target) / std::abs(target);
    report.max_energy_residual = std::max(report.max_energy_residual, rel);
  }

  std::vector<double> probe(ks.begin(), ks.end());
  if (probe.empty()) {
    const double k1 = spectrum.kappa(0);
    probe = {0.5 * k1, k1, 2.0 * k1};
  }
  for (double k : probe) {
    const double r = reflection_coefficient(curve, k);
    report.reflection_samples.emplace_back(k, r);
    report.max_reflection = std::max(report.max_reflection, r);
  }
  report.sum_rule = sum_rule(curve, spectrum);
  return report;
}

}  // namespace rlp
