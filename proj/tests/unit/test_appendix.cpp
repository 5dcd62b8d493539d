#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ising2q/appendix.hpp"
#include "ising2q/error.hpp"
#include "support.hpp"

using namespace ising2q;
using ising2q::testing::Draw;
using ising2q::testing::kPi;

namespace {

ModelParams axis_draw(Draw& draw) {
  ModelParams p = draw.params();
  p.theta1 = 0.0;
  return p;
}

}  // namespace

TEST_CASE("appendix spectrum at B1 = 0.5, B2 = 1, theta2 = pi/2") {
  const AppendixResult r = appendix_oracle({1.0, 0.5, 1.0, 0.0, kPi / 2, 0.0});
  const double s5 = std::sqrt(5.0);
  CHECK(r.spectrum.ex_minus == doctest::Approx(-0.5 - s5).epsilon(1e-15));
  CHECK(r.spectrum.ex_plus == doctest::Approx(-0.5 + s5).epsilon(1e-15));
  CHECK(r.spectrum.ey_minus == doctest::Approx(0.5 - s5).epsilon(1e-15));
  CHECK(r.spectrum.ey_plus == doctest::Approx(0.5 + s5).epsilon(1e-15));
}

TEST_CASE("appendix rejects theta1 != 0") {
  CHECK_THROWS_AS(appendix_oracle({1.0, 0.5, 1.0, 0.1, kPi / 2, 0.0}), ParameterError);
  CHECK_THROWS_AS(appendix_oracle({1.0, -0.5, 1.0, 0.0, kPi / 2, 0.0}), ParameterError);
}

TEST_CASE("appendix amplitudes are normalized") {
  Draw draw(71);
  for (int n = 0; n < 2000; ++n) {
    const ModelParams p = axis_draw(draw);
    const AppendixSpectrum s = appendix_oracle(p).spectrum;
    CHECK(std::abs(s.a_plus * s.a_plus + s.b_plus * s.b_plus - 1.0) <= 1e-12);
    CHECK(std::abs(s.a_minus * s.a_minus + s.b_minus * s.b_minus - 1.0) <= 1e-12);
    CHECK(std::abs(s.c_plus * s.c_plus + s.d_plus * s.d_plus - 1.0) <= 1e-12);
    CHECK(std::abs(s.c_minus * s.c_minus + s.d_minus * s.d_minus - 1.0) <= 1e-12);
    // Eigenvectors of the same block are orthogonal.
    CHECK(std::abs(s.a_plus * s.a_minus + s.b_plus * s.b_minus) <= 1e-12);
    CHECK(std::abs(s.c_plus * s.c_minus + s.d_plus * s.d_minus) <= 1e-12);
  }
}

TEST_CASE("appendix amplitudes survive small transverse fields") {
  for (double t : {1e-3, 1e-6, 1e-9, 0.0, kPi}) {
    const AppendixSpectrum s = appendix_oracle({1.0, 0.3, 0.42, 0.0, t, 0.5}).spectrum;
    CHECK(std::abs(s.a_plus * s.a_plus + s.b_plus * s.b_plus - 1.0) <= 1e-12);
    CHECK(std::abs(s.c_minus * s.c_minus + s.d_minus * s.d_minus - 1.0) <= 1e-12);
  }
}

TEST_CASE("appendix matches the numeric pipeline") {
  Draw draw(81);
  for (int n = 0; n < 1000; ++n) {
    ModelParams p = axis_draw(draw);
    if (n % 5 == 0) p.T = 0.0;
    const AppendixResult r = appendix_oracle(p);

    std::array<double, 4> closed{r.spectrum.ex_minus, r.spectrum.ex_plus, r.spectrum.ey_minus, r.spectrum.ey_plus};
    std::sort(closed.begin(), closed.end());
    const Vec4 numeric = eigh(hamiltonian(p)).values;
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - numeric[k]) <= 1e-10);

    const DensityMatrix rho = equilibrium_state(p);
    CHECK(max_abs_diff(rho.matrix().entries(), r.rho.matrix().entries()) <= 1e-10);
    CHECK(max_abs_diff(spin_flip(rho), r.flip.r12) <= 1e-10);
  }
}

TEST_CASE("appendix spin-flip eigenvalues come in pairs and C = 0") {
  Draw draw(91);
  for (int n = 0; n < 2000; ++n) {
    ModelParams p = axis_draw(draw);
    if (n % 3 == 0) p.T = 0.0;
    const AppendixResult r = appendix_oracle(p);
    CHECK(r.flip.eigenvalues[0] == r.flip.eigenvalues[1]);
    CHECK(r.flip.eigenvalues[2] == r.flip.eigenvalues[3]);
    CHECK(std::abs(r.concurrence.lambdas[0] - r.concurrence.lambdas[1]) <= 1e-12);
    CHECK(std::abs(r.concurrence.lambdas[2] - r.concurrence.lambdas[3]) <= 1e-12);
    CHECK(r.concurrence.concurrence <= 1e-12);
    CHECK(concurrence_at(p) <= 1e-10);
  }
}

TEST_CASE("non-degenerate ground state has a zero spin-flip matrix") {
  Draw draw(101);
  int checked = 0;
  while (checked < 300) {
    ModelParams p = axis_draw(draw);
    p.T = 0.0;
    const AppendixResult r = appendix_oracle(p);
    if (std::get<GroundStateKind>(r.rho.kind()).degeneracy != 1) continue;
    CHECK(norm_inf(r.flip.r12) <= 1e-12);
    ++checked;
  }
}

TEST_CASE("theta1 = pi is the closed form with B1 -> -B1") {
  Draw draw(111);
  for (int n = 0; n < 500; ++n) {
    ModelParams p = draw.params();
    p.theta1 = kPi;
    const AppendixResult r = appendix_oracle_signed(p.J, -p.B1, p.B2, p.theta2, p.T);
    // sin(pi) is 1.2e-16, so the numeric Hamiltonian carries a tiny x field.
    CHECK(max_abs_diff(thermal_state(p).matrix().entries(), r.rho.matrix().entries()) <= 1e-10);
    CHECK(concurrence_at(p) <= 1e-10);
  }
}

TEST_CASE("appendix partition function") {
  const ModelParams p{1.0, 0.5, 1.0, 0.0, kPi / 3, 0.7};
  const AppendixResult r = appendix_oracle(p);
  const PartitionValue z = partition_function(p);
  CHECK(r.partition.shift == doctest::Approx(z.shift).epsilon(1e-13));
  CHECK(r.partition.z == doctest::Approx(z.z).epsilon(1e-13));
}
