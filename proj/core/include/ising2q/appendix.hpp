#pragma once

// Closed-form solution of the two-qubit Ising model when the field on qubit 1
// points along the Ising axis. Independent of the numerical pipeline; used as
// an oracle for it.
//
// The closed form is written in a basis where sz|0> = -|0>. Results returned
// here are mapped to the natural basis used everywhere else (index i -> 3 - i).

#include "ising2q/entanglement.hpp"
#include "ising2q/linalg4.hpp"
#include "ising2q/model.hpp"
#include "ising2q/thermal.hpp"

namespace ising2q {

/// Energies and eigenvector amplitudes of the two decoupled 2x2 blocks.
/// |X+-> = a+- |00> + b+- |01>,  |Y+-> = c+- |10> + d+- |11>  (closed-form basis)
struct AppendixSpectrum {
  double ex_minus = 0.0, ex_plus = 0.0;  // -B1 -+ sqrt(4J^2 + B2^2 - 4 J B2 cos t)
  double ey_minus = 0.0, ey_plus = 0.0;  //  B1 -+ sqrt(4J^2 + B2^2 + 4 J B2 cos t)
  double a_minus = 0.0, a_plus = 0.0;
  double b_minus = 0.0, b_plus = 0.0;
  double c_minus = 0.0, c_plus = 0.0;
  double d_minus = 0.0, d_plus = 0.0;
};

/// Entries of the block-structured spin-flipped matrix and its eigenvalues.
///   A = r11 r44 - r12 r34,  B = r22 r33 - r12 r34,
///   C = r33 r12 - r11 r34,  D = r44 r12 - r22 r34   (closed-form basis, 1-based)
struct SpinFlipBlocks {
  double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
  Vec4 eigenvalues{};  ///< l1 = l2 >= l3 = l4
  Mat4 r12{};          ///< assembled from A..D, natural basis
};

struct AppendixResult {
  AppendixSpectrum spectrum;
  DensityMatrix rho;  ///< natural basis
  PartitionValue partition;  ///< z and shift; z == 0 at T == 0
  SpinFlipBlocks flip;
  ConcurrenceResult concurrence;
};

/// Requires p.theta1 == 0; throws ParameterError otherwise. T == 0 selects the
/// (possibly degenerate) ground state.
AppendixResult appendix_oracle(const ModelParams& p);

/// Same closed form with a signed z-field on qubit 1, so theta1 = pi is
/// representable as b1z = -B1.
AppendixResult appendix_oracle_signed(double J, double b1z, double B2, double theta2, double T);

}  // namespace ising2q
