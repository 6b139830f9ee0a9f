#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "rlp/naive_oracle.hpp"
#include "rlp/spectral_core.hpp"
#include "rlp/tau_engine.hpp"
#include "rlp/verify.hpp"
#include "rlp/wavefunctions.hpp"

namespace rlp {

// Spectral input documents:
//   {"kappas": [...],
//    "norming": {"mode": "symmetric" | "constants" | "shifts", "values": [...]},
//    "c_phys": 1.0}
// "norming" and "c_phys" are optional (symmetric, 1.0). Throws ParseError.
SpectralInput spectral_input_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const SpectralInput& input);

nlohmann::json to_json(const PotentialCurve& curve);  // {"xs", "vs", "c_phys"}
PotentialCurve potential_curve_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const BenchmarkReport& report);

// CSV writers use 17 significant digits.
void write_csv(std::ostream& os, const PotentialCurve& curve);  // x,V
PotentialCurve read_potential_csv(std::istream& is);
void write_csv(std::ostream& os, const BenchmarkReport& report);
// x,psi_1,...,psi_N over grid
void write_wavefunction_csv(std::ostream& os, const WavefunctionSet& set,
                            std::span<const double> grid);
nlohmann::json wavefunction_json(const WavefunctionSet& set, std::span<const double> grid);

std::string format_double(double v);

}  // namespace rlp
