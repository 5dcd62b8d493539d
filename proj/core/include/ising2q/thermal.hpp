#pragma once

#include <variant>

#include "ising2q/linalg4.hpp"
#include "ising2q/model.hpp"

namespace ising2q {

/// Gibbs state at reduced temperature `T` > 0.
struct ThermalKind {
  double T = 0.0;
  friend bool operator==(const ThermalKind&, const ThermalKind&) = default;
};

/// Uniform mixture over a `degeneracy`-fold ground eigenspace (T = 0).
struct GroundStateKind {
  int degeneracy = 1;
  friend bool operator==(const GroundStateKind&, const GroundStateKind&) = default;
};

/// State supplied directly by the caller (pure states, Bell states, ...).
struct PreparedKind {
  friend bool operator==(const PreparedKind&, const PreparedKind&) = default;
};

using StateKind = std::variant<ThermalKind, GroundStateKind, PreparedKind>;

/// Unit-trace positive semidefinite two-qubit state.
class DensityMatrix {
 public:
  /// Checks trace == 1 (1e-12) and eigenvalues >= -1e-12; throws NumericalError otherwise.
  static DensityMatrix from_matrix(const SymMatrix4& m, StateKind kind = PreparedKind{});

  /// |psi><psi| for `psi` normalized internally. Throws on a zero vector.
  static DensityMatrix pure(const Vec4& psi);

  const SymMatrix4& matrix() const noexcept { return m_; }
  const StateKind& kind() const noexcept { return kind_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  friend DensityMatrix thermal_state(const ModelParams& p);
  friend DensityMatrix ground_state(const ModelParams& p);

  DensityMatrix(const SymMatrix4& m, StateKind kind) : m_(m), kind_(kind) {}

  SymMatrix4 m_;
  StateKind kind_;
};

/// Partition function evaluated on energies shifted so the lowest is zero.
struct PartitionValue {
  double z = 0.0;      ///< sum_i exp(-(E_i - shift) / T), always >= 1
  double beta = 0.0;   ///< 1 / T
  double shift = 0.0;  ///< E_0, the lowest eigenvalue

  /// tr exp(-H / T) without the shift; may overflow for small T.
  double unshifted() const;
};

/// Scale-aware tolerance for grouping degenerate levels: 1e-9 (E_3 - E_0 + 1).
double degeneracy_tolerance(const Vec4& ascending_energies);

/// Gibbs state exp(-H/T)/Z. Requires T > 0; throws ParameterError otherwise.
DensityMatrix thermal_state(const ModelParams& p);

/// T -> 0+ limit: uniform mixture over the ground eigenspace. Ignores p.T.
DensityMatrix ground_state(const ModelParams& p);

/// Requires T > 0.
PartitionValue partition_function(const ModelParams& p);

/// ground_state for T == 0, thermal_state otherwise.
DensityMatrix equilibrium_state(const ModelParams& p);

}  // namespace ising2q
