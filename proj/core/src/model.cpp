#include "ising2q/model.hpp"

#include <cmath>

#include "ising2q/error.hpp"

namespace ising2q {

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw ParameterError(field, "must be finite");
}

void require_non_negative(double v, const char* field) {
  require_finite(v, field);
  if (v < 0.0) throw ParameterError(field, "must be >= 0");
}

void add_scaled(Mat4& acc, const Mat4& term, double k) {
  if (k == 0.0) return;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) acc[i][j] += k * term[i][j];
}

}  // namespace

void ModelParams::validate() const {
  require_finite(J, "J");
  if (J <= 0.0) throw ParameterError("J", "must be > 0");
  require_non_negative(B1, "B1");
  require_non_negative(B2, "B2");
  require_finite(theta1, "theta1");
  require_finite(theta2, "theta2");
  require_non_negative(T, "T");
}

SymMatrix4 hamiltonian(const ModelParams& p) {
  p.validate();
  using namespace pauli;
  static const Mat4 zz = kron2(kZ, kZ);
  static const Mat4 z1 = kron2(kZ, kI);
  static const Mat4 x1 = kron2(kX, kI);
  static const Mat4 z2 = kron2(kI, kZ);
  static const Mat4 x2 = kron2(kI, kX);

  Mat4 h{};
  // J (sz1 sz2 + sz2 sz1): the two Ising terms are identical.
  add_scaled(h, zz, 2.0 * p.J);
  add_scaled(h, z1, p.B1 * std::cos(p.theta1));
  add_scaled(h, x1, p.B1 * std::sin(p.theta1));
  add_scaled(h, z2, p.B2 * std::cos(p.theta2));
  add_scaled(h, x2, p.B2 * std::sin(p.theta2));
  return SymMatrix4(h);
}

double ground_energy(const ModelParams& p) { return eigh(hamiltonian(p)).values[0]; }

Mat4 swap_operator() {
  Mat4 s{};
  s[0][0] = 1.0;
  s[1][2] = 1.0;
  s[2][1] = 1.0;
  s[3][3] = 1.0;
  return s;
}

Mat4 reflection_operator() { return kron2(pauli::kZ, pauli::kZ); }

}  // namespace ising2q
