#include "rlp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rlp/errors.hpp"
#include "rlp/io.hpp"
#include "rlp/spectra_gen.hpp"

namespace rlp::cli {

namespace {

constexpr double reflection_threshold = 1e-3;
constexpr double default_extent = 30.0;  // in units of 1/kappa_1

double parse_decimal(std::string_view text, std::string_view context) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError,
                "cannot read '" + std::string(text) + "' in " + std::string(context));
  }
  return v;
}

int parse_int(std::string_view text, std::string_view context) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError,
                "cannot read integer '" + std::string(text) + "' in " + std::string(context));
  }
  return v;
}

struct RunConfig {
  std::string command;
  std::string preset;
  std::string input;
  std::string grid;
  std::string output;
  std::string format = "csv";
  std::string n_list = "1..10";
  int points = 1000;
  std::optional<double> c_phys;
  double tolerance = 1e-4;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpectralInput load_input(const RunConfig& cfg) {
  SpectralInput in;
  if (!cfg.preset.empty() && !cfg.input.empty()) {
    throw Error(ErrorCode::InvalidParameter, "give either --preset or --input, not both");
  }
  if (!cfg.preset.empty()) {
    in = preset_spectrum(cfg.preset);
  } else if (!cfg.input.empty()) {
    // A preset string is accepted in place of a path.
    std::ifstream probe(cfg.input);
    if (!probe && cfg.input.find(':') != std::string::npos) {
      in = preset_spectrum(cfg.input);
    } else {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(read_file(cfg.input));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("input is not valid JSON: ") + e.what());
      }
      in = spectral_input_from_json(doc);
    }
  } else {
    throw Error(ErrorCode::InvalidParameter, "one of --preset or --input is required");
  }
  if (cfg.c_phys) in.c_phys = *cfg.c_phys;
  return in;
}

std::vector<double> grid_for(const RunConfig& cfg, const ValidatedSpectrum& s, double default_step) {
  if (!cfg.grid.empty()) {
    const GridSpec g = parse_grid(cfg.grid);
    return uniform_grid(g.min, g.max, g.step);
  }
  const double extent = default_extent / s.kappa(0);
  return uniform_grid(-extent, extent, default_step);
}

void require_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") {
    throw Error(ErrorCode::ParseError, "--format must be csv or json, got '" + cfg.format + "'");
  }
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "bench") {
    require_format(cfg);
    const auto ns = parse_n_list(cfg.n_list);
    const BenchmarkReport report = benchmark(ns, cfg.points);
    if (cfg.format == "json") {
      out << to_json(report).dump(2) << '\n';
    } else {
      write_csv(out, report);
    }
    return exit_ok;
  }

  const SpectralInput input = load_input(cfg);
  const ValidatedSpectrum spectrum = validate(input);

  if (cfg.command == "spectrum") {
    out << to_json(input).dump(2) << '\n';
    return exit_ok;
  }
  if (cfg.command == "reconstruct") {
    require_format(cfg);
    const auto grid = grid_for(cfg, spectrum, 0.01);
    const PotentialCurve curve = sample_potential(build_expansion(spectrum), grid);
    if (cfg.format == "json") {
      out << to_json(curve).dump() << '\n';
    } else {
      write_csv(out, curve);
    }
    return exit_ok;
  }
  if (cfg.command == "wavefunctions") {
    require_format(cfg);
    const auto grid = grid_for(cfg, spectrum, 0.01);
    const WavefunctionSet set(spectrum);
    if (cfg.format == "json") {
      out << wavefunction_json(set, grid).dump() << '\n';
    } else {
      write_wavefunction_csv(out, set, grid);
    }
    return exit_ok;
  }
  if (cfg.command == "verify") {
    const auto grid = grid_for(cfg, spectrum, 1e-3);
    const PotentialCurve curve = sample_potential(build_expansion(spectrum), grid);
    const VerificationReport report = verify_reconstruction(curve, spectrum);
    out << to_json(report).dump(2) << '\n';
    const auto [integral, expected] = report.sum_rule;
    const double sum_rel = std::abs(integral - expected) / std::abs(expected);
    const bool ok = report.max_energy_residual <= cfg.tolerance &&
                    report.max_reflection <= reflection_threshold && sum_rel <= cfg.tolerance;
    return ok ? exit_ok : exit_verification;
  }
  throw Error(ErrorCode::ParseError, "unknown command '" + cfg.command + "'");
}

void report_error(std::ostream& err, std::string_view code, std::string_view detail) {
  err << nlohmann::json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw Error(ErrorCode::ParseError, "grid must look like min:max:step, got '" + text + "'");
  }
  const std::string_view view(text);
  GridSpec g;
  g.min = parse_decimal(view.substr(0, first), "--grid");
  g.max = parse_decimal(view.substr(first + 1, second - first - 1), "--grid");
  g.step = parse_decimal(view.substr(second + 1), "--grid");
  if (!(g.min < g.max) || !(g.step > 0.0)) {
    throw Error(ErrorCode::ParseError, "grid needs min < max and step > 0");
  }
  return g;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::string_view view(text);
    const int lo = parse_int(view.substr(0, dots), "--n");
    const int hi = parse_int(view.substr(dots + 2), "--n");
    if (lo > hi) throw Error(ErrorCode::ParseError, "--n range is empty");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_int(rest.substr(0, comma), "--n"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Reflectionless potential reconstruction from bound-state data"};
  app.require_subcommand(1, 1);

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset, "pt:N, well:S or morse:A");
    sub->add_option("--input", cfg.input, "spectral JSON file (or a preset string)");
    sub->add_option("--c-phys", cfg.c_phys, "overrides the kinetic prefactor C");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", cfg.output, "output path"); };

  auto* reconstruct = app.add_subcommand("reconstruct", "sample V(x) on a grid");
  add_source(reconstruct);
  reconstruct->add_option("--grid", cfg.grid, "min:max:step");
  reconstruct->add_option("--format", cfg.format, "csv or json");
  add_output(reconstruct);

  auto* verify = app.add_subcommand("verify", "shooting, reflection and sum-rule checks");
  add_source(verify);
  verify->add_option("--grid", cfg.grid, "min:max:step");
  verify->add_option("--tolerance", cfg.tolerance, "relative tolerance for energies and sum rule");
  verify->add_option("--format", cfg.format, "ignored; reports are JSON");
  add_output(verify);

  auto* wave = app.add_subcommand("wavefunctions", "bound-state wavefunctions on a grid");
  add_source(wave);
  wave->add_option("--grid", cfg.grid, "min:max:step");
  wave->add_option("--format", cfg.format, "csv or json");
  add_output(wave);

  auto* bench = app.add_subcommand("bench", "expansion versus naive determinant timings");
  bench->add_option("--n", cfg.n_list, "1..10, a single N or a comma list");
  bench->add_option("--points", cfg.points, "grid points per N");
  bench->add_option("--format", cfg.format, "csv or json");
  add_output(bench);

  auto* spectrum = app.add_subcommand("spectrum", "emit the spectral input for a preset");
  add_source(spectrum);
  spectrum->add_option("--format", cfg.format, "ignored; always JSON");
  add_output(spectrum);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, to_string(ErrorCode::ParseError), e.what());
    return exit_validation;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.output.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    const int status = dispatch(cfg, buffer);
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidParameter, "cannot write '" + cfg.output + "'");
    file << buffer.str();
    return status;
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return exit_validation;
  }
}

}  // namespace rlp::cli
