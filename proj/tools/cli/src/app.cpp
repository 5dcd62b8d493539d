#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ising2q/entanglement.hpp"
#include "ising2q/error.hpp"
#include "ising2q/model.hpp"
#include "ising2q/presets.hpp"
#include "ising2q/sweep.hpp"
#include "ising2q/thermal.hpp"
#include "ising2q_cli/cli.hpp"
#include "ising2q_cli/spec_json.hpp"
#include "json.hpp"

namespace ising2q::cli {

namespace {

namespace fs = std::filesystem;
using OrderedJson = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return text;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

struct PointOptions {
  std::string J = "1", B1 = "0", B2 = "0", theta1 = "0", theta2 = "0", T = "0";
  std::string output;
  std::string format = "json";
};

struct GridOptions {
  std::string target;  // preset id or spec path
  std::string output;
  std::string format = "csv";
  unsigned threads = 0;
};

std::string point_report(const PointOptions& o) {
  const ModelParams p{parse_number(o.J, "J"),           parse_number(o.B1, "B1"),
                      parse_number(o.B2, "B2"),         parse_angle(o.theta1, "theta1"),
                      parse_angle(o.theta2, "theta2"), parse_number(o.T, "T")};
  p.validate();
  const ConcurrenceResult c = concurrence(equilibrium_state(p));
  const double e0 = ground_energy(p);

  if (o.format == "csv") {
    std::string out = "J,B1,B2,theta1,theta2,T,concurrence,eof,lambda1,lambda2,lambda3,lambda4,ground_energy\n";
    for (double v : {p.J, p.B1, p.B2, p.theta1, p.theta2, p.T, c.concurrence, c.eof, c.lambdas[0], c.lambdas[1],
                     c.lambdas[2], c.lambdas[3]})
      out += format_csv(v) + ",";
    return out + format_csv(e0) + "\n";
  }
  OrderedJson doc{{"J", p.J},
                  {"B1", p.B1},
                  {"B2", p.B2},
                  {"theta1", p.theta1},
                  {"theta2", p.theta2},
                  {"T", p.T},
                  {"concurrence", c.concurrence},
                  {"eof", c.eof},
                  {"lambdas", c.lambdas},
                  {"ground_energy", e0}};
  return doc.dump(2) + "\n";
}

OrderedJson argmax_json(const SweepResult& r) {
  const ArgMax m = argmax(r);
  OrderedJson coords = OrderedJson::object();
  for (std::size_t k = 0; k < r.axes.size(); ++k) coords[std::string(param_name(r.axes[k].param))] = m.coordinates[k];
  return {{"value", m.value}, {"indices", m.indices}, {"coordinates", coords}};
}

// Writes the data file and its <stem>.summary.json sidecar; returns both paths.
std::vector<fs::path> write_sweep(const SweepSpec& spec, const SweepResult& r, const fs::path& data_path,
                                  const std::string& format) {
  write_file(data_path, format == "json" ? to_json(r) : to_csv(r));

  OrderedJson summary;
  summary["argmax"] = argmax_json(r);
  summary["resolved_spec"] = OrderedJson::parse(spec_to_json(spec));
  fs::path sidecar = data_path;
  sidecar.replace_filename(data_path.stem().string() + ".summary.json");
  write_file(sidecar, summary.dump(2) + "\n");
  return {data_path, sidecar};
}

void cmd_preset(const GridOptions& o, std::ostream& out) {
  const FigurePreset preset = figure_preset(o.target);
  const fs::path dir = o.output.empty() ? fs::path(".") : fs::path(o.output);
  for (const SweepSpec& spec : preset.curves) {
    SweepResult r = run_sweep(spec, o.threads);
    r.preset_id = preset.id;
    const fs::path data = dir / (preset.id + "_" + spec.label + "." + o.format);
    for (const fs::path& p : write_sweep(spec, r, data, o.format)) out << "wrote " << p.string() << "\n";
  }
}

void cmd_sweep(const GridOptions& o, std::ostream& out) {
  const SweepSpec spec = parse_sweep_spec(read_file(o.target));
  const SweepResult r = run_sweep(spec, o.threads);
  const fs::path data = o.output.empty() ? fs::path(fs::path(o.target).stem().string() + "." + o.format)
                                         : fs::path(o.output);
  for (const fs::path& p : write_sweep(spec, r, data, o.format)) out << "wrote " << p.string() << "\n";
}

void add_grid_options(CLI::App* sub, GridOptions& o, const char* output_help) {
  sub->add_option("-o,--output", o.output, output_help);
  sub->add_option("--format", o.format, "Data file format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", o.threads, "Worker threads, 0 for one per core");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of a two-qubit Ising model in site-dependent magnetic fields", "ising2q"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ISING2Q_VERSION));

  PointOptions point;
  CLI::App* point_cmd = app.add_subcommand("point", "Evaluate a single parameter point");
  point_cmd->add_option("--J", point.J, "Ising coupling (> 0)");
  point_cmd->add_option("--B1", point.B1, "Field magnitude on qubit 1");
  point_cmd->add_option("--B2", point.B2, "Field magnitude on qubit 2");
  point_cmd->add_option("--theta1", point.theta1, "Field angle on qubit 1 from the z axis: radians or e.g. 0.5pi");
  point_cmd->add_option("--theta2", point.theta2, "Field angle on qubit 2");
  point_cmd->add_option("--T", point.T, "Temperature in units of J/k_B; 0 selects the ground state");
  point_cmd->add_option("-o,--output", point.output, "Write to a file instead of stdout");
  point_cmd->add_option("--format", point.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  GridOptions preset;
  CLI::App* preset_cmd = app.add_subcommand("preset", "Reproduce one figure panel");
  preset_cmd->add_option("id", preset.target, "Preset id, e.g. fig1a")->required();
  add_grid_options(preset_cmd, preset, "Output directory (default: current directory)");

  GridOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a sweep described by a JSON file");
  sweep_cmd->add_option("spec", sweep.target, "Sweep specification (JSON)")->required();
  add_grid_options(sweep_cmd, sweep, "Output data file (default: <spec stem>.<format>)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (point_cmd->parsed()) {
      const std::string report = point_report(point);
      if (point.output.empty()) out << report;
      else write_file(point.output, report);
    } else if (preset_cmd->parsed()) {
      cmd_preset(preset, out);
    } else if (sweep_cmd->parsed()) {
      cmd_sweep(sweep, out);
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const SweepPointError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}

}  // namespace ising2q::cli
