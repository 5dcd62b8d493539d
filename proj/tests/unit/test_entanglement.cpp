#include <cmath>

#include "doctest.h"
#include "ising2q/entanglement.hpp"
#include "ising2q/error.hpp"
#include "support.hpp"

using namespace ising2q;
using ising2q::testing::Draw;
using ising2q::testing::kPi;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix mixture(const Vec4& a, const Vec4& b) {
  const Mat4 pa = outer(a), pb = outer(b);
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = 0.5 * (pa[i][j] + pb[i][j]);
  return DensityMatrix::from_matrix(SymMatrix4(m));
}

void check_result_invariants(const ConcurrenceResult& r) {
  CHECK(r.concurrence >= 0.0);
  CHECK(r.concurrence <= 1.0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(r.lambdas[k] >= 0.0);
  for (std::size_t k = 0; k < 3; ++k) CHECK(r.lambdas[k] >= r.lambdas[k + 1]);
  const double expected = std::max(r.lambdas[0] - r.lambdas[1] - r.lambdas[2] - r.lambdas[3], 0.0);
  CHECK(std::abs(r.concurrence - std::min(expected, 1.0)) <= 1e-12);
  CHECK(r.eof == doctest::Approx(entanglement_of_formation(r.concurrence)).epsilon(1e-15));
}

}  // namespace

TEST_CASE("spin_flip") {
  SUBCASE("product state is annihilated") {
    CHECK(norm_inf(spin_flip(DensityMatrix::pure({1, 0, 0, 0}))) == 0.0);
  }
  SUBCASE("singlet") {
    const DensityMatrix rho = DensityMatrix::pure({0, kInvSqrt2, -kInvSqrt2, 0});
    CHECK(max_abs_diff(spin_flip(rho), rho.matrix().entries()) <= 1e-15);
  }
  SUBCASE("trace is non-negative") {
    Draw draw(2);
    for (int n = 0; n < 500; ++n) CHECK(trace(spin_flip(thermal_state(draw.params()))) >= -1e-15);
  }
}

TEST_CASE("Bell states are maximally entangled") {
  const std::array<Vec4, 4> bell{Vec4{kInvSqrt2, 0, 0, kInvSqrt2}, Vec4{kInvSqrt2, 0, 0, -kInvSqrt2},
                                 Vec4{0, kInvSqrt2, kInvSqrt2, 0}, Vec4{0, kInvSqrt2, -kInvSqrt2, 0}};
  for (const Vec4& psi : bell) {
    const DensityMatrix rho = DensityMatrix::pure(psi);
    const ConcurrenceResult a = concurrence(rho);
    const ConcurrenceResult b = concurrence_bruteforce(rho);
    CHECK(a.concurrence == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.concurrence == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.eof == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.lambdas[1] == 0.0);
  }
}

TEST_CASE("separable states have zero concurrence") {
  CHECK(concurrence(mixture({1, 0, 0, 0}, {0, 0, 0, 1})).concurrence == 0.0);
  CHECK(concurrence_bruteforce(mixture({1, 0, 0, 0}, {0, 0, 0, 1})).concurrence == 0.0);
  CHECK(concurrence(DensityMatrix::from_matrix(SymMatrix4::diagonal({0.1, 0.2, 0.3, 0.4}))).concurrence == 0.0);

  // Product of two single-qubit pure states.
  const double c1 = std::cos(0.3), s1 = std::sin(0.3), c2 = std::cos(1.1), s2 = std::sin(1.1);
  const DensityMatrix prod = DensityMatrix::pure({c1 * c2, c1 * s2, s1 * c2, s1 * s2});
  CHECK(concurrence(prod).concurrence <= 1e-12);
  CHECK(concurrence_bruteforce(prod).concurrence <= 1e-12);
}

TEST_CASE("Werner states: C = max(0, (3p - 1) / 2)") {
  const Mat4 singlet = outer({0, kInvSqrt2, -kInvSqrt2, 0});
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] = p * singlet[i][j] + (i == j ? (1 - p) / 4 : 0.0);
    const DensityMatrix rho = DensityMatrix::from_matrix(SymMatrix4(m));
    const double want = std::max(0.0, (3 * p - 1) / 2);
    CHECK(concurrence(rho).concurrence == doctest::Approx(want).epsilon(1e-12));
    CHECK(concurrence_bruteforce(rho).concurrence == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("concurrence: model examples") {
  SUBCASE("transverse fields at B = J give 1/sqrt2") {
    const ConcurrenceResult r = concurrence(ground_state({1.0, 1, 1, kPi / 2, kPi / 2, 0}));
    CHECK(r.concurrence == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(concurrence_at({1.0, 1, 1, kPi / 2, kPi / 2, 0}) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
  }
  SUBCASE("one field along the Ising axis") {
    CHECK(concurrence_at({1.0, 0.7, 1.3, 0.0, 0.4 * kPi, 0.3}) <= 1e-12);
  }
  SUBCASE("degenerate zero-field ground state") {
    CHECK(concurrence_at({1.0, 0, 0, 0, 0, 0}) == 0.0);
    CHECK(concurrence_at({1.0, 1, 1, 0, 0, 0}) == 0.0);
  }
  SUBCASE("x fields follow 1/sqrt(1 + (B/J)^2)") {
    for (double b : {0.01, 0.3, 1.0, 2.0, 3.7}) {
      for (double J : {0.5, 1.0, 2.0}) {
        const double want = 1.0 / std::sqrt(1.0 + (b / J) * (b / J));
        CHECK(concurrence_at({J, b, b, kPi / 2, kPi / 2, 0}) == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("pure-state oracle") {
  Draw draw(31);
  for (int n = 0; n < 1000; ++n) {
    const Vec4 psi = draw.unit_vector();
    const DensityMatrix rho = DensityMatrix::pure(psi);
    const double want = testing::pure_concurrence(psi);
    const ConcurrenceResult a = concurrence(rho);
    const ConcurrenceResult b = concurrence_bruteforce(rho);
    CHECK(std::abs(a.concurrence - want) <= 1e-10);
    CHECK(std::abs(b.concurrence - want) <= 1e-10);
    check_result_invariants(a);
    check_result_invariants(b);
  }
}

TEST_CASE("dual routes agree on thermal states") {
  Draw draw(41);
  for (int n = 0; n < 1000; ++n) {
    const DensityMatrix rho = thermal_state(draw.params(5.0, 1e-3, 5.0));
    const ConcurrenceResult a = concurrence(rho);
    const ConcurrenceResult b = concurrence_bruteforce(rho);
    CHECK(std::abs(a.concurrence - b.concurrence) <= 1e-9);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(a.lambdas[k] - b.lambdas[k]) <= 1e-7);
    check_result_invariants(a);
  }
}

TEST_CASE("concurrence is invariant under swap and reflection") {
  Draw draw(51);
  for (int n = 0; n < 1000; ++n) {
    ModelParams p = draw.params();
    if (n % 4 == 0) p.T = 0.0;
    const double c = concurrence_at(p);

    ModelParams swapped = p;
    std::swap(swapped.B1, swapped.B2);
    std::swap(swapped.theta1, swapped.theta2);
    CHECK(std::abs(concurrence_at(swapped) - c) <= 1e-10);

    ModelParams reflected = p;
    reflected.theta1 = -p.theta1;
    reflected.theta2 = -p.theta2;
    CHECK(std::abs(concurrence_at(reflected) - c) <= 1e-10);
  }
}

TEST_CASE("limits") {
  Draw draw(61);
  for (int n = 0; n < 300; ++n) {
    ModelParams p = draw.params();
    p.T = 1e6;
    CHECK(concurrence_at(p) == 0.0);

    ModelParams zero = draw.params(0.0);
    zero.B1 = zero.B2 = 0.0;
    CHECK(concurrence_at(zero) == 0.0);
  }
}

TEST_CASE("entanglement of formation") {
  CHECK(entanglement_of_formation(0.0) == 0.0);
  CHECK(entanglement_of_formation(1.0) == 1.0);
  CHECK(entanglement_of_formation(kInvSqrt2) == doctest::Approx(0.60087603669285610084).epsilon(1e-14));
  CHECK(entanglement_of_formation(1.0 + 1e-13) == 1.0);
  CHECK_THROWS_AS(entanglement_of_formation(1.0 + 1e-9), ParameterError);
  CHECK_THROWS_AS(entanglement_of_formation(-1e-9), ParameterError);

  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double e = entanglement_of_formation(i / 1000.0);
    CHECK(e > prev);
    prev = e;
  }

  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
}
