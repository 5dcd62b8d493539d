#pragma once

#include "ising2q/linalg4.hpp"
#include "ising2q/thermal.hpp"

namespace ising2q {

struct ConcurrenceResult {
  double concurrence = 0.0;  ///< in [0, 1]
  Vec4 lambdas{};            ///< square roots of the R12 eigenvalues, descending
  double eof = 0.0;          ///< entanglement of formation, in [0, 1]
};

/// R12 = rho (sy x sy) rho* (sy x sy). rho is real, so rho* = rho.
Mat4 spin_flip(const DensityMatrix& rho);

/// Wootters concurrence via the symmetric matrix sqrt(rho) Y sqrt(rho), whose
/// absolute eigenvalues are the square roots of the R12 eigenvalues.
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// Same quantity from the eigenvalues of the non-symmetric R12 itself,
/// computed by Hessenberg QR in binary128. Used for cross-validation.
/// Throws NumericalError on an eigenvalue with imaginary part > 1e-8.
ConcurrenceResult concurrence_bruteforce(const DensityMatrix& rho);

/// Binary entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double x);

/// h((1 + sqrt(1 - c^2)) / 2). Throws ParameterError for c outside [0, 1].
double entanglement_of_formation(double c);

/// Concurrence of the equilibrium state: ground state for T == 0, Gibbs state otherwise.
double concurrence_at(const ModelParams& p);

}  // namespace ising2q
