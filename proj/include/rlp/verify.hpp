#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "rlp/spectral_core.hpp"
#include "rlp/tau_engine.hpp"

namespace rlp {

// Forward checks on a sampled potential. Nothing here touches the tau
// expansion; a curve is just numbers on a uniform grid.

enum class Direction { LeftToRight, RightToLeft };

struct NumerovSolution {
  std::vector<double> xs;
  std::vector<std::complex<double>> psi;
};

// Three-term Numerov recurrence for psi'' = ((V - E)/C) psi. The two starting
// samples are exp(+q x) (from the left) or exp(-q x) (from the right) with
// q = sqrt(-E/C) for E < 0, and the discrete right-moving plane wave for
// E > 0. Exponentially growing solutions are rescaled as a whole, so only
// the shape is meaningful. Throws NonUniformGrid.
NumerovSolution numerov_integrate(const PotentialCurve& curve, double energy, Direction direction);

// The `count` lowest bound-state energies, ascending, by node-count
// bracketing and bisection on the matching-point Wronskian. Throws
// StateCountMismatch when the curve holds a different number of states.
std::vector<double> bound_states(const PotentialCurve& curve, int count);

// |R(k)| at E = C k^2 from a transmitted wave e^{ikx} imposed at the right
// edge, decomposed into incident and reflected waves at the left edge.
// Throws InsufficientDecay when |V| at either edge exceeds 1e-10.
double reflection_coefficient(const PotentialCurve& curve, double k);

// (trapezoid integral of V, -4 C sum kappa_n). Throws InsufficientDecay.
std::pair<double, double> sum_rule(const PotentialCurve& curve, const ValidatedSpectrum& spectrum);

struct VerificationReport {
  std::vector<double> recovered_energies;  // ascending
  std::vector<double> target_energies;     // -C kappa_n^2, ascending
  std::vector<std::pair<double, double>> reflection_samples;  // (k, |R|)
  std::pair<double, double> sum_rule;      // (integral, expected)
  double max_energy_residual = 0.0;        // max relative energy error
  double max_reflection = 0.0;
};

// Runs all three checks. Empty `ks` means k in {0.5, 1, 2} * kappa_1.
VerificationReport verify_reconstruction(const PotentialCurve& curve,
                                         const ValidatedSpectrum& spectrum,
                                         std::span<const double> ks = {});

}  // namespace rlp
