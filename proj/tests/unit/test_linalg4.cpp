#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ising2q/error.hpp"
#include "ising2q/linalg4.hpp"
#include "support.hpp"

using namespace ising2q;
using ising2q::testing::Draw;

namespace {

Mat4 reconstruct(const Spectrum4& s) {
  Mat4 out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const Mat4 p = outer(s.vector(k));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out[i][j] += s.values[k] * p[i][j];
  }
  return out;
}

double orthonormality_error(const Spectrum4& s) {
  return max_abs_diff(matmul(transpose(s.vectors), s.vectors), identity4());
}

}  // namespace

TEST_CASE("SymMatrix4 symmetrizes small asymmetry and rejects large") {
  Mat4 m = identity4();
  m[0][1] = 0.5;
  m[1][0] = 0.5 + 1e-14;
  const SymMatrix4 s(m);
  CHECK(s(0, 1) == s(1, 0));

  m[1][0] = 0.5 + 1e-6;
  CHECK_THROWS_AS(SymMatrix4{m}, NumericalError);
}

TEST_CASE("eigh on trivial inputs") {
  SUBCASE("identity") {
    const Spectrum4 s = eigh(SymMatrix4::identity());
    for (double v : s.values) CHECK(v == doctest::Approx(1.0));
    CHECK(orthonormality_error(s) <= 1e-12);
  }
  SUBCASE("already diagonal") {
    const Spectrum4 s = eigh(SymMatrix4::diagonal({2, -2, -2, 2}));
    CHECK(s.values == Vec4{-2, -2, 2, 2});
  }
  SUBCASE("zero matrix") {
    const Spectrum4 s = eigh(SymMatrix4{});
    CHECK(s.values == Vec4{0, 0, 0, 0});
  }
}

TEST_CASE("eigh ties keep Jacobi order") {
  // Diagonal input needs no rotation; equal values keep their index order.
  const Spectrum4 s = eigh(SymMatrix4::diagonal({3, 1, 3, 1}));
  CHECK(s.values == Vec4{1, 1, 3, 3});
  CHECK(s.vector(0) == Vec4{0, 1, 0, 0});
  CHECK(s.vector(1) == Vec4{0, 0, 0, 1});
  CHECK(s.vector(2) == Vec4{1, 0, 0, 0});
}

TEST_CASE("eigh properties on random symmetric matrices") {
  Draw draw(11);
  for (int n = 0; n < 2000; ++n) {
    const double scale = std::pow(10.0, draw.uniform(-3, 3));
    const SymMatrix4 m(draw.symmetric(scale));
    const Spectrum4 s = eigh(m);

    CHECK(std::is_sorted(s.values.begin(), s.values.end()));
    CHECK(orthonormality_error(s) <= 1e-12);
    CHECK(max_abs_diff(reconstruct(s), m.entries()) <= 1e-10 * std::max(1.0, norm_inf(m.entries())));

    Mat4 residual = matmul(m.entries(), s.vectors);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) residual[i][k] -= s.vectors[i][k] * s.values[k];
    CHECK(norm_inf(residual) <= 1e-10 * std::max(1.0, norm_inf(m.entries())) * 4);

    const double sum = s.values[0] + s.values[1] + s.values[2] + s.values[3];
    CHECK(std::abs(sum - m.trace()) <= 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("eigh is deterministic") {
  Draw draw(5);
  const SymMatrix4 m(draw.symmetric());
  const Spectrum4 a = eigh(m);
  const Spectrum4 b = eigh(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("sqrt_psd") {
  CHECK(sqrt_psd(SymMatrix4::identity()) == SymMatrix4::identity());

  const SymMatrix4 r = sqrt_psd(SymMatrix4::diagonal({4, 1, 0, 9}));
  CHECK(max_abs_diff(r.entries(), SymMatrix4::diagonal({2, 1, 0, 3}).entries()) <= 1e-15);

  CHECK_THROWS_AS(sqrt_psd(SymMatrix4::diagonal({1, 1, -1e-9, 1})), NumericalError);
  CHECK(sqrt_psd(SymMatrix4::diagonal({1, 1, -1e-13, 1}))(2, 2) == 0.0);

  Draw draw(7);
  for (int n = 0; n < 500; ++n) {
    // Random PSD matrix A^T A, some of them rank deficient.
    Mat4 a = draw.symmetric();
    if (n % 3 == 0) a[3] = {0, 0, 0, 0};
    const SymMatrix4 m(matmul(transpose(a), a));
    const SymMatrix4 s = sqrt_psd(m);
    CHECK(max_abs_diff(matmul(s.entries(), s.entries()), m.entries()) <= 1e-9);
    CHECK(eigh(s).values[0] >= -1e-12);
    CHECK(norm_inf(testing::commutator(s.entries(), m.entries())) <= 1e-9);
  }
}

TEST_CASE("kron2") {
  using namespace pauli;
  CHECK(kron2(kI, kI) == identity4());
  CHECK(kron2(kZ, kZ) == SymMatrix4::diagonal({1, -1, -1, 1}).entries());

  // sigma^y (x) sigma^y by hand: (-i)(-i) = -1 at the corners, (-i)(i) = 1 inside.
  const Mat4 expected{{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
  CHECK(pauli::yy() == expected);

  // Qubit 1 is the left factor: sx (x) I flips the first index bit.
  const Mat4 x1 = kron2(kX, kI);
  CHECK(x1[0][2] == 1.0);
  CHECK(x1[1][3] == 1.0);
  CHECK(x1[0][1] == 0.0);
}
