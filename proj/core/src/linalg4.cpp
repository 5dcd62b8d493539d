#include "ising2q/linalg4.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ising2q/error.hpp"

namespace ising2q {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kJacobiTolerance = 1e-14;
constexpr int kMaxSweeps = 100;
constexpr double kPsdSlack = 1e-12;

double off_diagonal_norm(const Mat4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

}  // namespace

SymMatrix4::SymMatrix4(const Mat4& entries) {
  double scale = 1.0;
  for (const auto& row : entries)
    for (double x : row) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < 4; ++i) {
    a_[i][i] = entries[i][i];
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (std::abs(entries[i][j] - entries[j][i]) > kSymmetryTolerance * scale)
        throw NumericalError("matrix is not symmetric");
      const double mean = 0.5 * (entries[i][j] + entries[j][i]);
      a_[i][j] = mean;
      a_[j][i] = mean;
    }
  }
}

SymMatrix4 SymMatrix4::identity() { return SymMatrix4(identity4()); }

SymMatrix4 SymMatrix4::diagonal(const Vec4& diag) {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = diag[i];
  return SymMatrix4(m);
}

double SymMatrix4::trace() const { return ising2q::trace(a_); }

double SymMatrix4::frobenius_norm() const {
  double s = 0.0;
  for (const auto& row : a_)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

Vec4 Spectrum4::vector(std::size_t k) const {
  Vec4 v{};
  for (std::size_t i = 0; i < 4; ++i) v[i] = vectors[i][k];
  return v;
}

Spectrum4 eigh(const SymMatrix4& m) {
  Mat4 a = m.entries();
  Mat4 v = identity4();
  const double threshold = kJacobiTolerance * m.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) throw NumericalError("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        // Rotation angle that annihilates a[p][q] (smaller of the two roots).
        const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        for (std::size_t k = 0; k < 4; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

  Spectrum4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (std::size_t i = 0; i < 4; ++i) out.vectors[i][k] = v[i][order[k]];
  }
  return out;
}

SymMatrix4 sqrt_psd(const SymMatrix4& m) {
  const Spectrum4 spec = eigh(m);
  if (spec.values[0] < -kPsdSlack) throw NumericalError("matrix is not positive semidefinite");

  Vec4 roots{};
  for (std::size_t k = 0; k < 4; ++k) roots[k] = std::sqrt(std::max(spec.values[k], 0.0));

  Mat4 s{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += spec.vectors[i][k] * roots[k] * spec.vectors[j][k];
      s[i][j] = acc;
      s[j][i] = acc;
    }
  }
  return SymMatrix4(s);
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          out[2 * i1 + i2][2 * j1 + j2] = a[i1][j1] * b[i2][j2];
  return out;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < 4; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

Mat4 transpose(const Mat4& a) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = a[j][i];
  return out;
}

Mat4 identity4() {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i) out[i][i] = 1.0;
  return out;
}

Vec4 apply(const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += a[i][j] * v[j];
  return out;
}

double trace(const Mat4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double norm_inf(const Mat4& a) {
  double n = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double x : row) s += std::abs(x);
    n = std::max(n, s);
  }
  return n;
}

Mat4 outer(const Vec4& v) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = v[i] * v[j];
  return out;
}

namespace pauli {

Mat4 yy() {
  Mat4 k = kron2(kMinusIY, kMinusIY);
  for (auto& row : k)
    for (double& x : row) x = -x;
  return k;
}

}  // namespace pauli

}  // namespace ising2q
