#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ising2q/error.hpp"
#include "ising2q/model.hpp"

namespace ising2q {

enum class Param { B1, B2, Theta1, Theta2, T };

/// Canonical identifier: "B1", "B2", "theta1", "theta2", "T".
std::string_view param_name(Param p);
std::optional<Param> parse_param(std::string_view name);

double get_param(const ModelParams& p, Param which);
void set_param(ModelParams& p, Param which, double value);

/// Uniform grid of `count` points from `start` to `stop` inclusive.
struct Axis {
  Param param = Param::B1;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  /// Point i is start + (stop - start) * (i / (count - 1)), so refining the
  /// grid to 2 count - 1 points reproduces the old coordinates bit-for-bit.
  double at(std::size_t i) const;
  std::vector<double> coordinates() const;

  friend bool operator==(const Axis&, const Axis&) = default;
};

enum class CouplingKind { Ratio, Offset };

/// target = value * source (Ratio) or target = source + value (Offset),
/// applied in list order after the axis coordinates are set.
struct Coupling {
  Param target = Param::B2;
  CouplingKind kind = CouplingKind::Ratio;
  Param source = Param::B1;
  double value = 1.0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

struct SweepSpec {
  ModelParams base;
  Axis axis1;
  std::optional<Axis> axis2;
  std::vector<Coupling> couplings;
  std::string label;  ///< free-form curve name, carried into the result

  /// Throws SpecError with a JSON-pointer style path on the first violation.
  void validate() const;

  /// Parameters at grid point (i, j); j is ignored for 1-D sweeps.
  ModelParams resolve(std::size_t i, std::size_t j = 0) const;

  std::size_t size() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct SweepResult {
  std::vector<Axis> axes;
  std::vector<double> values;  ///< concurrence, row-major with axis1 major
  ModelParams base;
  std::string preset_id;
  std::string label;

  double at(std::size_t i, std::size_t j = 0) const;
};

struct ArgMax {
  std::vector<std::size_t> indices;
  std::vector<double> coordinates;
  double value = 0.0;
};

/// Failure at one grid point; the message names the point's coordinates.
class SweepPointError : public Error {
 public:
  using Error::Error;
};

/// Evaluates the concurrence at every grid point. T == 0 points use the
/// ground state, T > 0 the Gibbs state. `threads` == 0 picks the hardware
/// concurrency; the result is identical for any thread count.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// First maximum in row-major order. Throws SpecError on an empty result.
ArgMax argmax(const SweepResult& result);

}  // namespace ising2q
