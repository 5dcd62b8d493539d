#include "ising2q/presets.hpp"

#include <array>
#include <numbers>

#include "ising2q/error.hpp"

namespace ising2q {

namespace {

constexpr double kPi = std::numbers::pi;

// Fractions of pi, formatted the way they appear in labels.
struct Angle {
  double frac;
  const char* text;
};

constexpr std::array<Angle, 3> kEqualAngles{{{0.01, "0.01pi"}, {0.1, "0.1pi"}, {0.5, "0.5pi"}}};
constexpr std::array<std::array<Angle, 2>, 3> kShiftedAngles{{
    {{{0.01, "0.01pi"}, {0.011, "0.011pi"}}},
    {{{0.1, "0.1pi"}, {0.11, "0.11pi"}}},
    {{{0.5, "0.5pi"}, {0.51, "0.51pi"}}},
}};

Axis field_axis() { return Axis{Param::B1, kFieldGridStart, kFieldGridStop, kCurvePoints}; }

SweepSpec field_curve(double theta1, double theta2, double ratio, double T, std::string label) {
  SweepSpec s;
  s.base = ModelParams{1.0, 0.0, 0.0, theta1, theta2, T};
  s.axis1 = field_axis();
  s.couplings.push_back(Coupling{Param::B2, CouplingKind::Ratio, Param::B1, ratio});
  s.label = std::move(label);
  return s;
}

std::string pair_label(const char* t1, const char* t2) {
  return std::string("theta1_") + t1 + "_theta2_" + t2;
}

// Equal field directions theta1 = theta2, B2 = ratio * B1.
std::vector<SweepSpec> equal_angle_curves(double ratio, double T) {
  std::vector<SweepSpec> out;
  for (const Angle& a : kEqualAngles)
    out.push_back(field_curve(a.frac * kPi, a.frac * kPi, ratio, T, pair_label(a.text, a.text)));
  return out;
}

// Slightly different directions, equal magnitudes.
std::vector<SweepSpec> shifted_angle_curves(double T) {
  std::vector<SweepSpec> out;
  for (const auto& [a, b] : kShiftedAngles)
    out.push_back(field_curve(a.frac * kPi, b.frac * kPi, 1.0, T, pair_label(a.text, b.text)));
  return out;
}

// theta2 = theta1 + offset, B2 = ratio * B1.
std::vector<SweepSpec> offset_curves(double offset_frac, double ratio, double T) {
  std::vector<SweepSpec> out;
  for (const Angle& a : kEqualAngles) {
    SweepSpec s = field_curve(a.frac * kPi, 0.0, ratio, T, std::string("theta1_") + a.text);
    s.couplings.push_back(Coupling{Param::Theta2, CouplingKind::Offset, Param::Theta1, offset_frac * kPi});
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SweepSpec> contour(double ratio, double T) {
  SweepSpec s;
  s.base = ModelParams{1.0, 2.1, 0.0, 0.0, 0.0, T};
  s.axis1 = Axis{Param::Theta1, 0.0, kPi, kContourPoints};
  s.axis2 = Axis{Param::Theta2, 0.0, kPi, kContourPoints};
  s.couplings.push_back(Coupling{Param::B2, CouplingKind::Ratio, Param::B1, ratio});
  s.label = "contour";
  return {s};
}

// Offset/ratio pairs shared by the zero- and finite-temperature field scans.
struct OffsetPanel {
  double offset;
  double ratio;
};
constexpr std::array<OffsetPanel, 4> kOffsetPanels{{{0.01, 1.0005}, {0.1, 1.0005}, {0.01, 1.05}, {0.1, 1.05}}};

}  // namespace

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids{"fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b",
                                            "fig2c", "fig2d", "fig3a", "fig3b", "fig4a", "fig4b",
                                            "fig4c", "fig4d", "fig5a", "fig5b", "fig6a", "fig6b"};
  return ids;
}

FigurePreset figure_preset(std::string_view id) {
  FigurePreset out;
  out.id = std::string(id);

  if (id == "fig1a") out.curves = equal_angle_curves(1.0, 0.0);
  else if (id == "fig1b") out.curves = equal_angle_curves(1.0005, 0.0);
  else if (id == "fig1c") out.curves = shifted_angle_curves(0.0);
  else if (id == "fig1d") out.curves = equal_angle_curves(1.05, 0.0);
  else if (id == "fig3a") out.curves = equal_angle_curves(1.0, 0.01);
  else if (id == "fig3b") out.curves = equal_angle_curves(1.05, 0.01);
  else if (id == "fig5a") out.curves = contour(1.0, 0.0);
  else if (id == "fig5b") out.curves = contour(3.0, 0.0);
  else if (id == "fig6a") out.curves = contour(1.0, 1.0);
  else if (id == "fig6b") out.curves = contour(3.0, 1.0);
  else if (id.size() == 5 && (id.starts_with("fig2") || id.starts_with("fig4")) && id[4] >= 'a' && id[4] <= 'd') {
    const OffsetPanel& panel = kOffsetPanels[static_cast<std::size_t>(id[4] - 'a')];
    const double T = id[3] == '2' ? 0.0 : 0.1;
    out.curves = offset_curves(panel.offset, panel.ratio, T);
  } else {
    throw SpecError("", "unknown preset '" + std::string(id) + "'");
  }
  return out;
}

}  // namespace ising2q
