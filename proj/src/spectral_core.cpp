#include "rlp/spectral_core.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "rlp/errors.hpp"

namespace rlp {

namespace {

constexpr double max_log_shift = 700.0;

std::string describe_pair(std::size_t i, double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << "kappa[" << i << "]=" << a << ", kappa[" << i + 1 << "]=" << b;
  return os.str();
}

void check_kappas(std::span<const double> kappas, const ValidationOptions& options) {
  if (kappas.empty()) {
    throw Error(ErrorCode::InvalidParameter, "spectrum must contain at least one kappa");
  }
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    if (!std::isfinite(kappas[i])) {
      throw Error(ErrorCode::InvalidParameter, "kappa[" + std::to_string(i) + "] is not finite");
    }
    if (kappas[i] <= 0.0) {
      throw Error(ErrorCode::NonPositiveKappa, "kappa[" + std::to_string(i) + "] must be > 0");
    }
  }
  const double min_gap = options.relative_gap * kappas.back();
  for (std::size_t i = 0; i + 1 < kappas.size(); ++i) {
    const double gap = kappas[i + 1] - kappas[i];
    if (gap <= 0.0) {
      throw Error(ErrorCode::NonAscendingSpectrum,
                  "kappas must be strictly ascending: " + describe_pair(i, kappas[i], kappas[i + 1]));
    }
    if (gap < min_gap) {
      throw Error(ErrorCode::DegenerateGap,
                  "kappa gap below tolerance: " + describe_pair(i, kappas[i], kappas[i + 1]));
    }
  }
}

}  // namespace

ValidatedSpectrum ValidatedSpectrum::with_c_phys(double c_phys) const {
  if (!(c_phys > 0.0) || !std::isfinite(c_phys)) {
    throw Error(ErrorCode::InvalidParameter, "c_phys must be a positive finite number");
  }
  return ValidatedSpectrum(kappas_, shifts_, c_phys);
}

std::vector<double> symmetric_shifts(std::span<const double> kappas) {
  const std::size_t n = kappas.size();
  std::vector<double> shifts(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += std::log(std::abs((kappas[j] + kappas[i]) / (kappas[j] - kappas[i])));
    }
    shifts[i] = acc / (2.0 * kappas[i]);
  }
  return shifts;
}

ValidatedSpectrum validate(const SpectralInput& input, const ValidationOptions& options) {
  check_kappas(input.kappas, options);
  if (!(input.c_phys > 0.0) || !std::isfinite(input.c_phys)) {
    throw Error(ErrorCode::InvalidParameter, "c_phys must be a positive finite number");
  }
  const std::size_t n = input.kappas.size();

  auto check_length = [n](std::size_t got, const char* what) {
    if (got != n) {
      throw Error(ErrorCode::LengthMismatch, std::string(what) + " has " + std::to_string(got) +
                                                 " entries, expected " + std::to_string(n));
    }
  };

  std::vector<double> shifts;
  if (std::holds_alternative<SymmetricMode>(input.norming)) {
    shifts = symmetric_shifts(input.kappas);
  } else if (const auto* c = std::get_if<NormingConstants>(&input.norming)) {
    check_length(c->values.size(), "norming constants");
    shifts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double cn = c->values[i];
      if (!(cn > 0.0) || !std::isfinite(cn)) {
        throw Error(ErrorCode::InvalidParameter,
                    "norming constant " + std::to_string(i) + " must be positive and finite");
      }
      const double k = input.kappas[i];
      // ln(C^2 / 2k) / 2k, written to avoid squaring C.
      shifts[i] = (2.0 * std::log(cn) - std::log(2.0 * k)) / (2.0 * k);
    }
  } else {
    const auto& s = std::get<Shifts>(input.norming);
    check_length(s.values.size(), "shifts");
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.values[i])) {
        throw Error(ErrorCode::InvalidParameter, "shift " + std::to_string(i) + " is not finite");
      }
    }
    shifts = s.values;
  }
  return ValidatedSpectrum(input.kappas, std::move(shifts), input.c_phys);
}

std::vector<double> norming_constants(const ValidatedSpectrum& spectrum) {
  std::vector<double> out(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double k = spectrum.kappa(i);
    const double log_arg = 2.0 * k * spectrum.shift(i);
    if (log_arg > max_log_shift) {
      throw Error(ErrorCode::OverflowShift,
                  "2*kappa*x for state " + std::to_string(i) + " exceeds " +
                      std::to_string(max_log_shift));
    }
    out[i] = std::sqrt(2.0 * k) * std::exp(0.5 * log_arg);
  }
  return out;
}

SpectralInput to_input(const ValidatedSpectrum& spectrum) {
  SpectralInput in;
  in.kappas.assign(spectrum.kappas().begin(), spectrum.kappas().end());
  in.norming = Shifts{{spectrum.shifts().begin(), spectrum.shifts().end()}};
  in.c_phys = spectrum.c_phys();
  return in;
}

}  // namespace rlp
