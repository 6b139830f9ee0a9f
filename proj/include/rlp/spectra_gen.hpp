#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rlp/spectral_core.hpp"
#include "rlp/tau_engine.hpp"

namespace rlp {

struct SquareWellParams {
  double half_width = 1.0;  // a
  double depth = 25.0;      // U0
  double c_phys = 1.0;
};

// Morse well V(x) = D (exp(-2 b x) - 2 exp(-b x)), b = 1 / (a_morse x0).
// The level formula E_n = -D (1 - (n + 1/2)/a_morse)^2 assumes the natural
// length unit x0 = sqrt(C / D).
struct MorseParams {
  double depth = 1.0;    // D
  double a_morse = 4.0;  // sqrt(D/C) / alpha
  double x0 = 1.0;
  double c_phys = 1.0;
};

// kappa = 1..N, symmetric. Throws NonPositiveN.
SpectralInput poschl_teller_spectrum(int n);

// Interior wavenumbers u_i / a of the finite square well, where
// u tan u = sqrt(R^2 - u^2) (even states) or -u cot u = sqrt(R^2 - u^2)
// (odd states) with R = sqrt(U0 a^2 / C). Symmetric mode.
SpectralInput square_well_spectrum(const SquareWellParams& p);

// Residual of the defining equation for root u of the given parity.
double square_well_residual(double u, double strength, bool even);

// kappa_n = sqrt(-E_n / C), ascending. Throws NoBoundStates when a_morse <= 1/2.
SpectralInput morse_spectrum(const MorseParams& p);

// Samples the Morse well itself, for side-by-side comparison output.
PotentialCurve morse_curve(const MorseParams& p, std::span<const double> grid);

// Named presets "pt:N", "well:sqrtU0" (a = C = 1) and "morse:a" (D = C = 1).
// Throws ParseError for anything else.
SpectralInput preset_spectrum(std::string_view name);

}  // namespace rlp
