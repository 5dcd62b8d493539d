#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ising2q/sweep.hpp"

namespace ising2q::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUserError = 2,
  kIoError = 3,
};

/// Runs the command line `args` (without the program name) in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Plain decimal number, locale independent. Throws ParameterError naming `field`.
double parse_number(std::string_view text, const std::string& field);

/// Radians ("1.5708") or a multiple of pi ("0.5pi", "pi", "-2pi", "0.25*pi").
double parse_angle(std::string_view text, const std::string& field);

/// 12 significant digits, '.' decimal separator, as used in CSV cells.
std::string format_csv(double v);

/// Header plus one row per grid point; LF line endings.
/// 1-D: `<axis>,concurrence` (B1 is written as "B"); 2-D: `<axis1>,<axis2>,concurrence`.
std::string to_csv(const SweepResult& r);

/// {axes: [{param, values}], concurrence: [...]} with the same row-major order as the CSV.
std::string to_json(const SweepResult& r);

}  // namespace ising2q::cli
