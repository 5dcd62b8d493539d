#pragma once

#include <string>
#include <string_view>

#include "ising2q/sweep.hpp"

namespace ising2q::cli {

/// Parses a sweep specification:
///
///   {"base": {"J", "B1", "B2", "theta1", "theta2", "T"},
///    "axis1": {"param", "start", "stop", "count"},
///    "axis2": {...},                                        (optional)
///    "couplings": [{"target", "expr": "ratio"|"offset", "source", "value"}],
///    "label": "..."}                                        (optional)
///
/// Angles and axis bounds of angle axes may be numbers or strings such as
/// "0.5pi". Missing base members keep their ModelParams defaults. A document
/// with a "resolved_spec" member (a sweep summary) is read from that member.
/// Throws SpecError with the JSON path of the first problem.
SweepSpec parse_sweep_spec(std::string_view json_text);

/// Canonical JSON form: every member present, numbers in radians with
/// round-trip precision. parse_sweep_spec(dump(spec_to_json(s))) == s.
std::string spec_to_json(const SweepSpec& s, int indent = 2);

}  // namespace ising2q::cli
