#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "ising2q/error.hpp"
#include "ising2q_cli/cli.hpp"
#include "json.hpp"

namespace ising2q::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// from_chars rejects a leading '+', which users do type.
bool to_double(std::string_view s, double& out) {
  if (s.starts_with('+')) s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string column_name(Param p) { return p == Param::B1 ? "B" : std::string(param_name(p)); }

}  // namespace

double parse_number(std::string_view text, const std::string& field) {
  double v = 0.0;
  const std::string t = trim(text);
  if (!to_double(t, v) || !std::isfinite(v)) throw ParameterError(field, "'" + t + "' is not a finite number");
  return v;
}

double parse_angle(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  if (!t.ends_with("pi")) return parse_number(t, field);

  std::string_view factor(t);
  factor.remove_suffix(2);
  if (factor.ends_with('*')) factor.remove_suffix(1);
  double k = 1.0;
  if (factor == "-") k = -1.0;
  else if (!factor.empty() && factor != "+" && (!to_double(factor, k) || !std::isfinite(k)))
    throw ParameterError(field, "'" + t + "' is not an angle");
  return k * std::numbers::pi;
}

std::string format_csv(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  return std::string(buf.data(), ptr);
}

std::string to_csv(const SweepResult& r) {
  std::string out;
  for (const Axis& a : r.axes) out += (r.axes.size() == 1 ? column_name(a.param) : std::string(param_name(a.param))) + ",";
  out += "concurrence\n";

  const std::size_t rows = static_cast<std::size_t>(r.axes.at(0).count);
  const std::size_t cols = r.axes.size() > 1 ? static_cast<std::size_t>(r.axes[1].count) : 1;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      out += format_csv(r.axes[0].at(i));
      out += ',';
      if (r.axes.size() > 1) {
        out += format_csv(r.axes[1].at(j));
        out += ',';
      }
      out += format_csv(r.values[i * cols + j]);
      out += '\n';
    }
  return out;
}

std::string to_json(const SweepResult& r) {
  nlohmann::ordered_json doc;
  doc["axes"] = nlohmann::ordered_json::array();
  for (const Axis& a : r.axes)
    doc["axes"].push_back({{"param", param_name(a.param)}, {"values", a.coordinates()}});
  doc["concurrence"] = r.values;
  return doc.dump(2) + "\n";
}

}  // namespace ising2q::cli
