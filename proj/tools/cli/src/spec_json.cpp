#include "ising2q_cli/spec_json.hpp"

#include <initializer_list>
#include <string>

#include "ising2q/error.hpp"
#include "ising2q_cli/cli.hpp"
#include "json.hpp"

namespace ising2q::cli {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

bool is_angle(Param p) { return p == Param::Theta1 || p == Param::Theta2; }

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path.empty() ? "/" : path, "must be an object");
}

void reject_unknown(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) throw SpecError(path + "/" + key, "unknown member");
  }
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw SpecError(path + "/" + key, "missing");
  return *it;
}

double read_real(const Json& j, const std::string& path, bool angle) {
  if (j.is_number()) return j.get<double>();
  if (angle && j.is_string()) {
    try {
      return parse_angle(j.get<std::string>(), path);
    } catch (const ParameterError& e) {
      throw SpecError(path, "'" + j.get<std::string>() + "' is not an angle");
    }
  }
  throw SpecError(path, angle ? "must be a number or an angle string such as \"0.5pi\"" : "must be a number");
}

Param read_param(const Json& j, const std::string& path) {
  if (j.is_string())
    if (const auto p = parse_param(j.get<std::string>())) return *p;
  throw SpecError(path, "must be one of \"B1\", \"B2\", \"theta1\", \"theta2\", \"T\"");
}

ModelParams read_base(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"J", "B1", "B2", "theta1", "theta2", "T"});
  ModelParams p;
  auto opt = [&](const char* key, double& dst, bool angle) {
    if (const auto it = j.find(key); it != j.end()) dst = read_real(*it, path + "/" + key, angle);
  };
  opt("J", p.J, false);
  opt("B1", p.B1, false);
  opt("B2", p.B2, false);
  opt("theta1", p.theta1, true);
  opt("theta2", p.theta2, true);
  opt("T", p.T, false);
  return p;
}

Axis read_axis(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"param", "start", "stop", "count"});
  Axis a;
  a.param = read_param(member(j, path, "param"), path + "/param");
  a.start = read_real(member(j, path, "start"), path + "/start", is_angle(a.param));
  a.stop = read_real(member(j, path, "stop"), path + "/stop", is_angle(a.param));
  const Json& count = member(j, path, "count");
  if (!count.is_number_integer()) throw SpecError(path + "/count", "must be an integer");
  const auto n = count.get<long long>();
  if (n < 2 || n > 100'000'000) throw SpecError(path + "/count", "must be in [2, 1e8]");
  a.count = static_cast<int>(n);
  return a;
}

Coupling read_coupling(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"target", "expr", "source", "value"});
  Coupling c;
  c.target = read_param(member(j, path, "target"), path + "/target");
  c.source = read_param(member(j, path, "source"), path + "/source");
  const Json& expr = member(j, path, "expr");
  if (expr == "ratio") c.kind = CouplingKind::Ratio;
  else if (expr == "offset") c.kind = CouplingKind::Offset;
  else throw SpecError(path + "/expr", "must be \"ratio\" or \"offset\"");
  c.value = read_real(member(j, path, "value"), path + "/value",
                      c.kind == CouplingKind::Offset && is_angle(c.target));
  return c;
}

SweepSpec read_spec(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"base", "axis1", "axis2", "couplings", "label"});
  SweepSpec s;
  s.base = read_base(member(j, path, "base"), path + "/base");
  s.axis1 = read_axis(member(j, path, "axis1"), path + "/axis1");
  if (const auto it = j.find("axis2"); it != j.end() && !it->is_null()) s.axis2 = read_axis(*it, path + "/axis2");
  if (const auto it = j.find("couplings"); it != j.end()) {
    if (!it->is_array()) throw SpecError(path + "/couplings", "must be an array");
    for (std::size_t k = 0; k < it->size(); ++k)
      s.couplings.push_back(read_coupling((*it)[k], path + "/couplings/" + std::to_string(k)));
  }
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw SpecError(path + "/label", "must be a string");
    s.label = it->get<std::string>();
  }

  // Re-anchor validation paths under `path` (non-empty for summaries).
  try {
    s.validate();
  } catch (const SpecError& e) {
    if (path.empty()) throw;
    std::string what = e.what();
    what = what.substr(what.find(": ") + 2);
    throw SpecError(path + e.path(), what);
  }
  return s;
}

OrderedJson axis_json(const Axis& a) {
  return {{"param", param_name(a.param)}, {"start", a.start}, {"stop", a.stop}, {"count", a.count}};
}

}  // namespace

SweepSpec parse_sweep_spec(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw SpecError("", std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("resolved_spec")) return read_spec(doc["resolved_spec"], "/resolved_spec");
  return read_spec(doc, "");
}

std::string spec_to_json(const SweepSpec& s, int indent) {
  OrderedJson doc;
  doc["base"] = {{"J", s.base.J},           {"B1", s.base.B1},         {"B2", s.base.B2},
                 {"theta1", s.base.theta1}, {"theta2", s.base.theta2}, {"T", s.base.T}};
  doc["axis1"] = axis_json(s.axis1);
  if (s.axis2) doc["axis2"] = axis_json(*s.axis2);
  doc["couplings"] = OrderedJson::array();
  for (const Coupling& c : s.couplings)
    doc["couplings"].push_back({{"target", param_name(c.target)},
                                {"expr", c.kind == CouplingKind::Ratio ? "ratio" : "offset"},
                                {"source", param_name(c.source)},
                                {"value", c.value}});
  doc["label"] = s.label;
  return doc.dump(indent);
}

}  // namespace ising2q::cli
