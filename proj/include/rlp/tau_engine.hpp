#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rlp/spectral_core.hpp"

namespace rlp {

// One paired term of the tau-function expansion,
//
//   a_T exp(alpha_T) + a_{T^c} exp(-alpha_T) = 2 A_T cosh(slope * x + offset),
//
// where T is the set of "minus" indices, a_T = D(kappa_T) and
// alpha_T = sum_{l not in T} k_l (x - x_l) - sum_{l in T} k_l (x - x_l).
struct TauTerm {
  std::uint32_t minus_mask = 0;  // bit i set <=> index i (0-based) is in T
  double coeff_log = 0.0;        // ln A_T, A_T = sqrt(a_T a_{T^c})
  double slope = 0.0;
  double offset = 0.0;

  std::vector<int> minus_indices() const;  // 1-based, ascending
};

// Immutable after construction. Holds exactly 2^{N-1} terms sorted by
// descending slope (ties by mask), so the T = {} term comes first.
class TauExpansion {
 public:
  const std::vector<TauTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const ValidatedSpectrum& spectrum() const noexcept { return spectrum_; }

 private:
  friend TauExpansion build_expansion(const ValidatedSpectrum&);
  TauExpansion(ValidatedSpectrum spectrum, std::vector<TauTerm> terms)
      : spectrum_(std::move(spectrum)), terms_(std::move(terms)) {}

  ValidatedSpectrum spectrum_;
  std::vector<TauTerm> terms_;
};

inline constexpr std::size_t max_expansion_size = 24;

// Throws SizeLimit for N > max_expansion_size, DegenerateGap via the
// alternant product.
TauExpansion build_expansion(const ValidatedSpectrum& spectrum);

// ln(tau) together with tau'/tau and tau''/tau. tau here is exactly
// det(A~_N).
struct TauValue {
  double log_tau;
  double d1;  // tau' / tau
  double d2;  // tau'' / tau
};
TauValue eval_tau(const TauExpansion& expansion, double x);

// V(x) = -2 C (tau''/tau - (tau'/tau)^2).
double eval_potential(const TauExpansion& expansion, double x);

struct PotentialCurve {
  std::vector<double> xs;
  std::vector<double> vs;
  double c_phys = 1.0;
};

// Throws EmptyGrid, InvalidParameter for non-ascending or non-finite grids.
PotentialCurve sample_potential(const TauExpansion& expansion, std::span<const double> grid);

// Amplitudes A_T / A_{} summed over terms sharing |slope|, in descending
// |slope| order. Only meaningful as a cosh series when every offset is zero
// (symmetric mode).
std::vector<std::pair<double, double>> merged_amplitudes(const TauExpansion& expansion,
                                                         double slope_tolerance = 1e-9);

// min, min+step, ... up to and including max (within step/1e6).
std::vector<double> uniform_grid(double min, double max, double step);

}  // namespace rlp
