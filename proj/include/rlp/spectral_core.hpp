#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace rlp {

// Norming information accompanying the decay rates kappa_n.
struct SymmetricMode {};
struct NormingConstants {
  std::vector<double> values;
};
struct Shifts {
  std::vector<double> values;
};
using Norming = std::variant<SymmetricMode, NormingConstants, Shifts>;

// Raw, unchecked spectral data as read from a file or preset.
struct SpectralInput {
  std::vector<double> kappas;
  Norming norming = SymmetricMode{};
  double c_phys = 1.0;  // hbar^2 / 2m
};

struct ValidationOptions {
  // Minimum allowed kappa gap, relative to the largest kappa.
  double relative_gap = 1e-8;
};

// A spectrum that passed validation, with norming stored as shifts x_n:
// exp(2 kappa_n x_n) = C_n^2 / (2 kappa_n).
class ValidatedSpectrum {
 public:
  std::size_t size() const noexcept { return kappas_.size(); }
  std::span<const double> kappas() const noexcept { return kappas_; }
  std::span<const double> shifts() const noexcept { return shifts_; }
  double kappa(std::size_t i) const { return kappas_[i]; }
  double shift(std::size_t i) const { return shifts_[i]; }
  double c_phys() const noexcept { return c_phys_; }

  ValidatedSpectrum with_c_phys(double c_phys) const;

 private:
  friend ValidatedSpectrum validate(const SpectralInput&, const ValidationOptions&);
  ValidatedSpectrum(std::vector<double> kappas, std::vector<double> shifts, double c_phys)
      : kappas_(std::move(kappas)), shifts_(std::move(shifts)), c_phys_(c_phys) {}

  std::vector<double> kappas_;
  std::vector<double> shifts_;
  double c_phys_;
};

// Throws NonAscendingSpectrum, NonPositiveKappa, DegenerateGap, LengthMismatch
// or InvalidParameter.
ValidatedSpectrum validate(const SpectralInput& input, const ValidationOptions& options = {});

// Shifts that make the reconstructed potential even: 2 kappa_i x_i is the sum
// over j != i of ln|(kappa_j + kappa_i) / (kappa_j - kappa_i)|. Zero for N = 1.
std::vector<double> symmetric_shifts(std::span<const double> kappas);

// C_n = sqrt(2 kappa_n exp(2 kappa_n x_n)). Throws OverflowShift when
// 2 kappa_n x_n > 700.
std::vector<double> norming_constants(const ValidatedSpectrum& spectrum);

// Back to an input with explicit shifts; validate(to_input(s)) reproduces s.
SpectralInput to_input(const ValidatedSpectrum& spectrum);

}  // namespace rlp
