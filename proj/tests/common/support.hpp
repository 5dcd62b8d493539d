#pragma once

// Shared helpers for the unit suites: seeded generators and small oracles
// that do not go through the library's own numerical path.

#include <cmath>
#include <numbers>
#include <random>

#include "ising2q/linalg4.hpp"
#include "ising2q/model.hpp"

namespace ising2q::testing {

inline constexpr double kPi = std::numbers::pi;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  ModelParams params(double bmax = 5.0, double tmin = 0.01, double tmax = 5.0) {
    return ModelParams{1.0, uniform(0, bmax), uniform(0, bmax), uniform(0, kPi), uniform(0, kPi),
                       uniform(tmin, tmax)};
  }

  Vec4 unit_vector() {
    Vec4 v{};
    double n = 0.0;
    for (double& x : v) {
      x = std::normal_distribution<double>(0.0, 1.0)(rng_);
      n += x * x;
    }
    for (double& x : v) x /= std::sqrt(n);
    return v;
  }

  Mat4 symmetric(double scale = 1.0) {
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) m[i][j] = m[j][i] = uniform(-scale, scale);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

inline Mat4 conjugate(const Mat4& u, const Mat4& a) { return matmul(matmul(u, a), transpose(u)); }

inline Mat4 commutator(const Mat4& a, const Mat4& b) {
  const Mat4 ab = matmul(a, b);
  const Mat4 ba = matmul(b, a);
  Mat4 c{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c[i][j] = ab[i][j] - ba[i][j];
  return c;
}

/// Concurrence of a pure state (a, b, c, d): 2 |ad - bc|.
inline double pure_concurrence(const Vec4& psi) { return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]); }

}  // namespace ising2q::testing
