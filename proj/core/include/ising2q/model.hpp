#pragma once

#include "ising2q/linalg4.hpp"

namespace ising2q {

/// Physical inputs in reduced units: energies in units of J, temperature as
/// k_B T / J, angles in radians measured from the Ising (z) axis.
struct ModelParams {
  double J = 1.0;
  double B1 = 0.0;
  double B2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double T = 0.0;

  /// Throws ParameterError naming the first offending field.
  /// Any finite angle is accepted.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// H = 2J sz1 sz2 + B1 (cos t1 sz1 + sin t1 sx1) + B2 (cos t2 sz2 + sin t2 sx2)
SymMatrix4 hamiltonian(const ModelParams& p);

/// Lowest eigenvalue of hamiltonian(p).
double ground_energy(const ModelParams& p);

/// Permutation exchanging the two qubits (|01> <-> |10>).
Mat4 swap_operator();

/// sz (x) sz = diag(1, -1, -1, 1); conjugating H by it flips both transverse terms.
Mat4 reflection_operator();

}  // namespace ising2q
