#include "rlp/spectra_gen.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "rlp/errors.hpp"

namespace rlp {

namespace {

constexpr int max_bisection_steps = 120;

// f(lo) < 0 < f(hi) required.
template <class F>
double bisect(F&& f, double lo, double hi) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw Error(ErrorCode::RootBracketFailure, "square-well branch bracket does not change sign");
  }
  for (int i = 0; i < max_bisection_steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double parse_number(std::string_view text, std::string_view preset) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "bad number in preset '" + std::string(preset) + "'");
  }
  return value;
}

}  // namespace

SpectralInput poschl_teller_spectrum(int n) {
  if (n < 1) throw Error(ErrorCode::NonPositiveN, "Poschl-Teller preset needs N >= 1");
  SpectralInput in;
  for (int k = 1; k <= n; ++k) in.kappas.push_back(k);
  return in;
}

double square_well_residual(double u, double strength, bool even) {
  const double rhs = std::sqrt(std::max(strength * strength - u * u, 0.0));
  return even ? u * std::tan(u) - rhs : -u / std::tan(u) - rhs;
}

SpectralInput square_well_spectrum(const SquareWellParams& p) {
  if (!(p.half_width > 0.0) || !(p.depth > 0.0) || !(p.c_phys > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "square well needs a > 0, U0 > 0, C > 0");
  }
  const double r = std::sqrt(p.depth * p.half_width * p.half_width / p.c_phys);
  constexpr double half_pi = std::numbers::pi / 2.0;

  // Branch j of u tan u lives on (j pi, j pi + pi/2), branch j of -u cot u on
  // (j pi + pi/2, (j+1) pi); walking the half-periods in order interleaves
  // the two parities.
  std::vector<double> roots;
  for (int m = 0; m * half_pi < r; ++m) {
    const bool even = m % 2 == 0;
    const double lo = m * half_pi;
    const double pole = (m + 1) * half_pi;
    const double hi = std::min(pole, r);
    auto f = [&](double u) { return square_well_residual(u, r, even); };
    // Step inside the open interval; near the pole the residual is +inf.
    const double lo_in = std::nextafter(lo, hi);
    const double hi_in = hi == pole ? std::nextafter(pole, lo) : hi;
    if (!(f(lo_in) < 0.0)) continue;
    if (!(f(hi_in) > 0.0)) {
      // R sits exactly on a branch start; the would-be root has kappa = 0.
      continue;
    }
    roots.push_back(bisect(f, lo_in, hi_in));
  }
  if (roots.empty()) throw Error(ErrorCode::NoBoundStates, "square well has no bound states");

  SpectralInput in;
  in.c_phys = p.c_phys;
  for (double u : roots) in.kappas.push_back(u / p.half_width);
  return in;
}

SpectralInput morse_spectrum(const MorseParams& p) {
  if (!(p.depth > 0.0) || !(p.c_phys > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "Morse preset needs D > 0 and C > 0");
  }
  if (!(p.a_morse > 0.5)) {
    throw Error(ErrorCode::NoBoundStates, "Morse well with a <= 1/2 has no bound states");
  }
  SpectralInput in;
  in.c_phys = p.c_phys;
  std::vector<double> levels;
  for (int n = 0; (n + 0.5) / p.a_morse < 1.0; ++n) {
    const double factor = 1.0 - (n + 0.5) / p.a_morse;
    const double energy = -p.depth * factor * factor;
    levels.push_back(std::sqrt(-energy / p.c_phys));
  }
  in.kappas.assign(levels.rbegin(), levels.rend());
  return in;
}

PotentialCurve morse_curve(const MorseParams& p, std::span<const double> grid) {
  PotentialCurve curve;
  curve.c_phys = p.c_phys;
  curve.xs.assign(grid.begin(), grid.end());
  curve.vs.reserve(grid.size());
  const double rate = 1.0 / (p.a_morse * p.x0);
  for (double x : grid) {
    const double e = std::exp(-rate * x);
    curve.vs.push_back(p.depth * (e * e - 2.0 * e));
  }
  return curve;
}

SpectralInput preset_spectrum(std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "preset must look like family:value, got '" +
                                           std::string(name) + "'");
  }
  const std::string_view family = name.substr(0, colon);
  const std::string_view arg = name.substr(colon + 1);
  if (family == "pt") {
    const double n = parse_number(arg, name);
    if (n != std::floor(n)) throw Error(ErrorCode::ParseError, "pt:N needs an integer N");
    return poschl_teller_spectrum(static_cast<int>(n));
  }
  if (family == "well") {
    const double strength = parse_number(arg, name);
    return square_well_spectrum({.half_width = 1.0, .depth = strength * strength, .c_phys = 1.0});
  }
  if (family == "morse") {
    return morse_spectrum({.depth = 1.0, .a_morse = parse_number(arg, name), .x0 = 1.0,
                           .c_phys = 1.0});
  }
  throw Error(ErrorCode::ParseError, "unknown preset family '" + std::string(family) + "'");
}

}  // namespace rlp
