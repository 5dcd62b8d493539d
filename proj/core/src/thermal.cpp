#include "ising2q/thermal.hpp"

#include <cmath>

#include "ising2q/error.hpp"

namespace ising2q {

namespace {

constexpr double kTraceTolerance = 1e-12;
constexpr double kPsdSlack = 1e-12;

void require_positive_temperature(const ModelParams& p) {
  p.validate();
  if (!(p.T > 0.0)) throw ParameterError("T", "must be > 0 for a thermal state; use ground_state for T = 0");
}

Mat4 mix(const Spectrum4& spec, const Vec4& weights) {
  Mat4 rho{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (weights[k] == 0.0) continue;
    const Vec4 v = spec.vector(k);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rho[i][j] += weights[k] * v[i] * v[j];
  }
  return rho;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const SymMatrix4& m, StateKind kind) {
  if (std::abs(m.trace() - 1.0) > kTraceTolerance)
    throw NumericalError("density matrix trace differs from 1");
  if (eigh(m).values[0] < -kPsdSlack) throw NumericalError("density matrix is not positive semidefinite");
  return DensityMatrix(m, kind);
}

DensityMatrix DensityMatrix::pure(const Vec4& psi) {
  double n2 = 0.0;
  for (double x : psi) n2 += x * x;
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw NumericalError("state vector must be non-zero and finite");
  Vec4 u = psi;
  const double n = std::sqrt(n2);
  for (double& x : u) x /= n;
  return DensityMatrix(SymMatrix4(outer(u)), PreparedKind{});
}

double PartitionValue::unshifted() const { return z * std::exp(-beta * shift); }

double degeneracy_tolerance(const Vec4& e) { return 1e-9 * (e[3] - e[0] + 1.0); }

DensityMatrix thermal_state(const ModelParams& p) {
  require_positive_temperature(p);
  const Spectrum4 spec = eigh(hamiltonian(p));
  Vec4 w{};
  double z = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    w[k] = std::exp(-(spec.values[k] - spec.values[0]) / p.T);
    z += w[k];
  }
  for (double& x : w) x /= z;
  return DensityMatrix(SymMatrix4(mix(spec, w)), ThermalKind{p.T});
}

DensityMatrix ground_state(const ModelParams& p) {
  const Spectrum4 spec = eigh(hamiltonian(p));
  const double tol = degeneracy_tolerance(spec.values);
  int g = 1;
  while (g < 4 && spec.values[static_cast<std::size_t>(g)] - spec.values[0] <= tol) ++g;

  Vec4 w{};
  for (int k = 0; k < g; ++k) w[static_cast<std::size_t>(k)] = 1.0 / g;
  return DensityMatrix(SymMatrix4(mix(spec, w)), GroundStateKind{g});
}

PartitionValue partition_function(const ModelParams& p) {
  require_positive_temperature(p);
  const Spectrum4 spec = eigh(hamiltonian(p));
  PartitionValue out;
  out.beta = 1.0 / p.T;
  out.shift = spec.values[0];
  for (double e : spec.values) out.z += std::exp(-(e - out.shift) / p.T);
  return out;
}

DensityMatrix equilibrium_state(const ModelParams& p) {
  return p.T == 0.0 ? ground_state(p) : thermal_state(p);
}

}  // namespace ising2q
