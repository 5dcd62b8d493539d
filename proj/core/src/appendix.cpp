#include "ising2q/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ising2q/error.hpp"

namespace ising2q {

namespace {

struct Amplitudes {
  double first_plus, second_plus, first_minus, second_minus;
};

// Amplitudes of the eigenvectors of one 2x2 block in closed form:
//   first+-  = g / (sqrt2 r^(1/2) (r +- u)^(1/2)),   second+- = +-(r +- u)^(1/2) / (sqrt2 r^(1/2))
// with r^2 = u^2 + g^2. r +- u cancels when the signs oppose; it is then
// evaluated as g^2 / (r -+ u). When it vanishes (g == 0) the equivalent form
// first+- = sgn(g) sqrt((r -+ u) / 2r) is used instead.
Amplitudes block_amplitudes(double g, double u, double r) {
  if (r == 0.0) return {1.0, 0.0, 0.0, -1.0};  // block proportional to identity

  const double sgn_g = g < 0.0 ? -1.0 : 1.0;
  auto amplitude = [&](double sign) {
    const double rs = sign * u >= 0.0 ? r + sign * u : g * g / (r - sign * u);
    if (rs > 0.0) return std::pair{g / (std::sqrt(2.0) * std::sqrt(r) * std::sqrt(rs)),
                                     sign * std::sqrt(rs) / (std::sqrt(2.0) * std::sqrt(r))};
    const double rd = std::max(r - sign * u, 0.0);
    return std::pair{sgn_g * std::sqrt(rd / (2.0 * r)), sign * std::sqrt(std::max(rs, 0.0) / (2.0 * r))};
  };
  const auto [ap, bp] = amplitude(+1.0);
  const auto [am, bm] = amplitude(-1.0);
  return {ap, bp, am, bm};
}

}  // namespace

AppendixResult appendix_oracle(const ModelParams& p) {
  p.validate();
  if (p.theta1 != 0.0) throw ParameterError("theta1", "closed form requires theta1 == 0");
  return appendix_oracle_signed(p.J, p.B1, p.B2, p.theta2, p.T);
}

AppendixResult appendix_oracle_signed(double J, double b1z, double B2, double theta2, double T) {
  ModelParams check{J, std::abs(b1z), B2, 0.0, theta2, T};
  check.validate();

  const double cos_t = std::cos(theta2);
  const double g = B2 * std::sin(theta2);
  const double rx = std::sqrt(std::max(4.0 * J * J + B2 * B2 - 4.0 * J * B2 * cos_t, 0.0));
  const double ry = std::sqrt(std::max(4.0 * J * J + B2 * B2 + 4.0 * J * B2 * cos_t, 0.0));

  AppendixSpectrum sp;
  sp.ex_minus = -b1z - rx;
  sp.ex_plus = -b1z + rx;
  sp.ey_minus = b1z - ry;
  sp.ey_plus = b1z + ry;

  const Amplitudes x = block_amplitudes(g, B2 * cos_t - 2.0 * J, rx);
  const Amplitudes y = block_amplitudes(g, B2 * cos_t + 2.0 * J, ry);
  sp.a_plus = x.first_plus;
  sp.b_plus = x.second_plus;
  sp.a_minus = x.first_minus;
  sp.b_minus = x.second_minus;
  sp.c_plus = y.first_plus;
  sp.d_plus = y.second_plus;
  sp.c_minus = y.first_minus;
  sp.d_minus = y.second_minus;

  // Level order: X-, X+, Y-, Y+.
  const std::array<double, 4> energies{sp.ex_minus, sp.ex_plus, sp.ey_minus, sp.ey_plus};
  const std::array<Vec4, 4> states{Vec4{sp.a_minus, sp.b_minus, 0.0, 0.0},
                                   Vec4{sp.a_plus, sp.b_plus, 0.0, 0.0},
                                   Vec4{0.0, 0.0, sp.c_minus, sp.d_minus},
                                   Vec4{0.0, 0.0, sp.c_plus, sp.d_plus}};

  const double e_min = *std::min_element(energies.begin(), energies.end());
  const double e_max = *std::max_element(energies.begin(), energies.end());

  PartitionValue partition;
  partition.shift = e_min;
  std::array<double, 4> weights{};
  StateKind kind;
  if (T > 0.0) {
    partition.beta = 1.0 / T;
    for (std::size_t k = 0; k < 4; ++k) {
      weights[k] = std::exp(-partition.beta * (energies[k] - e_min));
      partition.z += weights[k];
    }
    for (double& w : weights) w /= partition.z;
    kind = ThermalKind{T};
  } else {
    const double tol = degeneracy_tolerance(Vec4{e_min, 0.0, 0.0, e_max});
    int g_count = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (energies[k] - e_min <= tol) ++g_count;
    for (std::size_t k = 0; k < 4; ++k)
      weights[k] = energies[k] - e_min <= tol ? 1.0 / g_count : 0.0;
    kind = GroundStateKind{g_count};
  }

  // rho in the closed-form basis, 0-based.
  Mat4 rc{};
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rc[i][j] += weights[k] * states[k][i] * states[k][j];

  SpinFlipBlocks flip;
  const double r11 = rc[0][0], r12 = rc[0][1], r22 = rc[1][1];
  const double r33 = rc[2][2], r34 = rc[2][3], r44 = rc[3][3];
  flip.A = r11 * r44 - r12 * r34;
  flip.B = r22 * r33 - r12 * r34;
  flip.C = r33 * r12 - r11 * r34;
  flip.D = r44 * r12 - r22 * r34;
  const double disc = std::sqrt(std::max((flip.A - flip.B) * (flip.A - flip.B) + 4.0 * flip.C * flip.D, 0.0));
  const double l12 = 0.5 * ((flip.A + flip.B) + disc);
  const double l34 = 0.5 * ((flip.A + flip.B) - disc);
  flip.eigenvalues = {l12, l12, l34, l34};

  const Mat4 r12c{{{flip.A, flip.C, 0.0, 0.0},
                   {flip.D, flip.B, 0.0, 0.0},
                   {0.0, 0.0, flip.B, -flip.C},
                   {0.0, 0.0, -flip.D, flip.A}}};

  // Closed-form basis state i is natural basis state 3 - i.
  Mat4 rho{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      rho[3 - i][3 - j] = rc[i][j];
      flip.r12[3 - i][3 - j] = r12c[i][j];
    }

  Vec4 lambdas{};
  for (std::size_t k = 0; k < 4; ++k) lambdas[k] = std::sqrt(std::max(flip.eigenvalues[k], 0.0));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  ConcurrenceResult conc;
  conc.lambdas = lambdas;
  conc.concurrence = std::max(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3], 0.0);
  conc.eof = entanglement_of_formation(conc.concurrence);

  return AppendixResult{sp, DensityMatrix::from_matrix(SymMatrix4(rho), kind), partition, flip, conc};
}

}  // namespace ising2q
