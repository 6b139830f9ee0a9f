#include "rlp/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "rlp/errors.hpp"

namespace rlp {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& node, const char* what) {
  if (!node.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) {
      throw Error(ErrorCode::ParseError, std::string(what) + " must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SpectralInput spectral_input_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "spectral input must be a JSON object");
  if (!doc.contains("kappas")) throw Error(ErrorCode::ParseError, "spectral input lacks 'kappas'");
  SpectralInput in;
  in.kappas = number_array(doc.at("kappas"), "kappas");
  if (doc.contains("c_phys")) {
    if (!doc.at("c_phys").is_number()) throw Error(ErrorCode::ParseError, "c_phys must be a number");
    in.c_phys = doc.at("c_phys").get<double>();
  }
  if (doc.contains("norming")) {
    const json& norming = doc.at("norming");
    if (!norming.is_object() || !norming.contains("mode") || !norming.at("mode").is_string()) {
      throw Error(ErrorCode::ParseError, "norming must be an object with a string 'mode'");
    }
    const std::string mode = norming.at("mode").get<std::string>();
    std::vector<double> values;
    if (norming.contains("values")) values = number_array(norming.at("values"), "norming.values");
    if (mode == "symmetric") {
      in.norming = SymmetricMode{};
    } else if (mode == "constants") {
      in.norming = NormingConstants{std::move(values)};
    } else if (mode == "shifts") {
      in.norming = Shifts{std::move(values)};
    } else {
      throw Error(ErrorCode::ParseError, "unknown norming mode '" + mode + "'");
    }
  }
  return in;
}

json to_json(const SpectralInput& input) {
  json norming;
  if (std::holds_alternative<SymmetricMode>(input.norming)) {
    norming = {{"mode", "symmetric"}, {"values", json::array()}};
  } else if (const auto* c = std::get_if<NormingConstants>(&input.norming)) {
    norming = {{"mode", "constants"}, {"values", c->values}};
  } else {
    norming = {{"mode", "shifts"}, {"values", std::get<Shifts>(input.norming).values}};
  }
  return {{"kappas", input.kappas}, {"norming", norming}, {"c_phys", input.c_phys}};
}

json to_json(const PotentialCurve& curve) {
  return {{"xs", curve.xs}, {"vs", curve.vs}, {"c_phys", curve.c_phys}};
}

PotentialCurve potential_curve_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("xs") || !doc.contains("vs")) {
    throw Error(ErrorCode::ParseError, "potential curve needs 'xs' and 'vs'");
  }
  PotentialCurve curve;
  curve.xs = number_array(doc.at("xs"), "xs");
  curve.vs = number_array(doc.at("vs"), "vs");
  if (doc.contains("c_phys")) curve.c_phys = doc.at("c_phys").get<double>();
  if (curve.xs.size() != curve.vs.size()) {
    throw Error(ErrorCode::LengthMismatch, "xs and vs differ in length");
  }
  return curve;
}

json to_json(const VerificationReport& report) {
  json samples = json::array();
  for (const auto& [k, r] : report.reflection_samples) samples.push_back({k, r});
  return {
      {"recovered_energies", report.recovered_energies},
      {"target_energies", report.target_energies},
      {"reflection_samples", samples},
      {"sum_rule", {report.sum_rule.first, report.sum_rule.second}},
      {"max_energy_residual", report.max_energy_residual},
      {"max_reflection", report.max_reflection},
  };
}

json to_json(const BenchmarkReport& report) {
  json rows = json::array();
  auto optional = [](double v) { return v < 0.0 ? json(nullptr) : json(v); };
  for (const auto& r : report.rows) {
    rows.push_back({{"N", r.n},
                    {"build_ns", r.build_ns},
                    {"expansion_ns", r.expansion_ns},
                    {"naive_lu_ns", optional(r.naive_lu_ns)},
                    {"naive_laplace_ns", optional(r.naive_laplace_ns)},
                    {"terms", r.terms},
                    {"max_abs_diff", optional(r.max_abs_diff)}});
  }
  return {{"points", report.points},
          {"grid", {report.grid_min, report.grid_max}},
          {"rows", rows}};
}

void write_csv(std::ostream& os, const PotentialCurve& curve) {
  os << "x,V\n";
  for (std::size_t i = 0; i < curve.xs.size(); ++i) {
    os << format_double(curve.xs[i]) << ',' << format_double(curve.vs[i]) << '\n';
  }
}

PotentialCurve read_potential_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "x,V") {
    throw Error(ErrorCode::ParseError, "potential CSV must start with header 'x,V'");
  }
  PotentialCurve curve;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::ParseError, "potential CSV row " + std::to_string(row) + " malformed");
    }
    try {
      curve.xs.push_back(std::stod(line.substr(0, comma)));
      curve.vs.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "potential CSV row " + std::to_string(row) + " malformed");
    }
  }
  return curve;
}

void write_csv(std::ostream& os, const BenchmarkReport& report) {
  os << "N,expansion_ns,naive_lu_ns,naive_laplace_ns,terms\n";
  auto cell = [](double v) { return v < 0.0 ? std::string() : format_double(v); };
  for (const auto& r : report.rows) {
    os << r.n << ',' << format_double(r.expansion_ns) << ',' << cell(r.naive_lu_ns) << ','
       << cell(r.naive_laplace_ns) << ',' << r.terms << '\n';
  }
}

void write_wavefunction_csv(std::ostream& os, const WavefunctionSet& set,
                            std::span<const double> grid) {
  os << 'x';
  for (std::size_t n = 1; n <= set.size(); ++n) os << ",psi_" << n;
  os << '\n';
  for (double x : grid) {
    os << format_double(x);
    for (double v : set.evaluate(x)) os << ',' << format_double(v);
    os << '\n';
  }
}

json wavefunction_json(const WavefunctionSet& set, std::span<const double> grid) {
  std::vector<std::vector<double>> psi(set.size());
  for (double x : grid) {
    const auto values = set.evaluate(x);
    for (std::size_t n = 0; n < values.size(); ++n) psi[n].push_back(values[n]);
  }
  return {{"xs", std::vector<double>(grid.begin(), grid.end())}, {"psi", psi}};
}

}  // namespace rlp
