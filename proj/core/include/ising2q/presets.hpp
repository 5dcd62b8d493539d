#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ising2q/sweep.hpp"

namespace ising2q {

/// Field-magnitude grid shared by the 1-D figures: B in [0.01 J, 4 J].
inline constexpr double kFieldGridStart = 0.01;
inline constexpr double kFieldGridStop = 4.0;
inline constexpr int kCurvePoints = 401;
/// (theta1, theta2) contour grids cover [0, pi]^2.
inline constexpr int kContourPoints = 201;

/// One figure panel: a set of curves (1-D) or a single contour (2-D).
struct FigurePreset {
  std::string id;
  std::vector<SweepSpec> curves;
};

/// fig1a..fig1d, fig2a..fig2d, fig3a, fig3b, fig4a..fig4d, fig5a, fig5b, fig6a, fig6b.
const std::vector<std::string>& preset_ids();

/// Throws SpecError for an unknown id.
FigurePreset figure_preset(std::string_view id);

}  // namespace ising2q
