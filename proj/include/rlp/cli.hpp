#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rlp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_verification = 3;

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
};

// "a:b:h" with min < max and step > 0. Throws Error(ParseError).
GridSpec parse_grid(const std::string& text);

// "1..10", "4" or "1,2,5". Throws Error(ParseError).
std::vector<int> parse_n_list(const std::string& text);

// Parses args (args[0] is the program name), runs the command and writes the
// artifact to --output or `out`. Errors go to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlp::cli
