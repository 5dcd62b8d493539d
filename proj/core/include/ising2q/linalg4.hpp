#pragma once

// Exact-size real linear algebra for two-qubit operators.
//
// Basis ordering is {|00>, |01>, |10>, |11>} with qubit 1 as the left
// tensor factor, so index = 2 * q1 + q2.

#include <array>
#include <cstddef>

namespace ising2q {

using Vec4 = std::array<double, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Real symmetric 4x4 matrix. Entries are exactly symmetric after construction.
class SymMatrix4 {
 public:
  /// Zero matrix.
  SymMatrix4() = default;

  /// Symmetrizes `entries`. Throws NumericalError when the asymmetry exceeds
  /// 1e-12 relative to max(1, max |entry|).
  explicit SymMatrix4(const Mat4& entries);

  static SymMatrix4 identity();
  static SymMatrix4 diagonal(const Vec4& diag);

  double operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Mat4& entries() const noexcept { return a_; }

  double trace() const;
  double frobenius_norm() const;

  friend bool operator==(const SymMatrix4&, const SymMatrix4&) = default;

 private:
  Mat4 a_{};
};

/// Eigen-decomposition of a SymMatrix4: values ascending, column k of
/// `vectors` is the unit eigenvector for values[k].
struct Spectrum4 {
  Vec4 values{};
  Mat4 vectors{};

  Vec4 vector(std::size_t k) const;
};

/// Cyclic Jacobi eigensolver. Converges when the off-diagonal Frobenius norm
/// drops to 1e-14 of the full norm; throws NumericalError after 100 sweeps.
Spectrum4 eigh(const SymMatrix4& m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-1e-12, 0) are clamped to zero, anything lower throws NumericalError.
SymMatrix4 sqrt_psd(const SymMatrix4& m);

/// Kronecker product a (x) b; `a` acts on qubit 1.
Mat4 kron2(const Mat2& a, const Mat2& b);

Mat4 matmul(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
Mat4 identity4();
Vec4 apply(const Mat4& a, const Vec4& v);
double trace(const Mat4& a);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Mat4& a, const Mat4& b);

/// Induced infinity norm (max absolute row sum).
double norm_inf(const Mat4& a);

/// Outer product v v^T.
Mat4 outer(const Vec4& v);

namespace pauli {

inline constexpr Mat2 kI{{{1.0, 0.0}, {0.0, 1.0}}};
inline constexpr Mat2 kX{{{0.0, 1.0}, {1.0, 0.0}}};
inline constexpr Mat2 kZ{{{1.0, 0.0}, {0.0, -1.0}}};
/// -i * sigma^y, the real part of the y Pauli matrix up to a phase.
inline constexpr Mat2 kMinusIY{{{0.0, -1.0}, {1.0, 0.0}}};

/// sigma^y (x) sigma^y = -(K (x) K) with K = -i sigma^y, hence real.
Mat4 yy();

}  // namespace pauli

}  // namespace ising2q
