#pragma once

#include <span>
#include <vector>

#include "rlp/linalg.hpp"
#include "rlp/spectral_core.hpp"
#include "rlp/tau_engine.hpp"

namespace rlp {

// A_mn = delta_mn + L_m L_n / (k_m + k_n), L_n(x) = C_n exp(-k_n x).
// Throws OverflowRange when some |ln L_n| > 350.
Matrix matrix_A(const ValidatedSpectrum& spectrum, double x);

// Normalized bound states Psi_n(x), n = 1..N indexing kappa ascending. The
// state with decay rate kappa_n has N - n nodes and Psi_n(x) e^{k_n x} -> C_n
// as x -> +inf.
//
// All states at one x come from a single solve of the diagonally rescaled
// system S A S z = -S L with s_m = min(1, 1/L_m), for which Psi_n = -s_n z_n;
// no entry of the rescaled system exceeds 1 in magnitude, so both tails are
// evaluated without overflow.
class WavefunctionSet {
 public:
  explicit WavefunctionSet(ValidatedSpectrum spectrum);

  const ValidatedSpectrum& spectrum() const noexcept { return spectrum_; }
  const TauExpansion& expansion() const noexcept { return expansion_; }
  std::size_t size() const noexcept { return spectrum_.size(); }

  std::vector<double> evaluate(double x) const;  // Psi_1..Psi_N
  double psi(int n, double x) const;             // throws IndexOutOfRange
  double energy(int n) const;                    // -C k_n^2

  // |Psi_n'' - ((V - E_n)/C) Psi_n| with a five-point Psi'' of step h.
  double residual(int n, double x, double h = 1e-3) const;

 private:
  void check_index(int n) const;

  ValidatedSpectrum spectrum_;
  TauExpansion expansion_;
  std::vector<double> log_norm_;  // ln C_n
};

double eval_psi(const ValidatedSpectrum& spectrum, int n, double x);
double schrodinger_residual(const ValidatedSpectrum& spectrum, int n, double x);

}  // namespace rlp
