#include "ising2q/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ising2q/error.hpp"

namespace ising2q {

namespace {

constexpr double kLambdaFloor = 1e-12;
constexpr double kUnitSlack = 1e-12;

}  // namespace

namespace detail {

// Sorts descending, zeroes sub-floor entries and assembles the result.
ConcurrenceResult finish_concurrence(Vec4 lambdas) {
  for (double& l : lambdas)
    if (l < kLambdaFloor) l = 0.0;
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());

  ConcurrenceResult out;
  out.lambdas = lambdas;
  out.concurrence = std::clamp(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3], 0.0, 1.0);
  out.eof = entanglement_of_formation(out.concurrence);
  return out;
}

}  // namespace detail

Mat4 spin_flip(const DensityMatrix& rho) {
  static const Mat4 yy = pauli::yy();
  const Mat4& r = rho.matrix().entries();
  return matmul(matmul(r, yy), matmul(r, yy));
}

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  static const Mat4 yy = pauli::yy();
  const Mat4& root = sqrt_psd(rho.matrix()).entries();
  const SymMatrix4 s(matmul(matmul(root, yy), root));
  const Spectrum4 spec = eigh(s);

  Vec4 lambdas{};
  for (std::size_t k = 0; k < 4; ++k) lambdas[k] = std::abs(spec.values[k]);
  return detail::finish_concurrence(lambdas);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entanglement_of_formation(double c) {
  if (!(c >= -kUnitSlack && c <= 1.0 + kUnitSlack))
    throw ParameterError("concurrence", "must lie in [0, 1]");
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double concurrence_at(const ModelParams& p) { return concurrence(equilibrium_state(p)).concurrence; }

}  // namespace ising2q
