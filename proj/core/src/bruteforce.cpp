// Concurrence from the eigenvalues of the non-symmetric spin-flipped matrix.
//
// The square roots of small R12 eigenvalues amplify rounding error
// (sqrt(1e-16) = 1e-8), so the eigenvalue problem is solved in binary128.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "ising2q/entanglement.hpp"
#include "ising2q/error.hpp"

namespace ising2q {

namespace detail {
ConcurrenceResult finish_concurrence(Vec4 lambdas);
}

namespace {

using Quad = _Float128;
// 1-based storage keeps the QR sweep close to its textbook form.
using QuadMat = std::array<std::array<Quad, 5>, 5>;

constexpr double kImaginaryTolerance = 1e-8;
constexpr int kMaxIterations = 60;

Quad qabs(Quad x) { return x < 0 ? -x : x; }
Quad qsign(Quad a, Quad b) { return b >= 0 ? qabs(a) : -qabs(a); }

// Reduction to upper Hessenberg form by stabilized elementary similarity transforms.
void to_hessenberg(QuadMat& a, int n) {
  for (int m = 2; m < n; ++m) {
    Quad x = 0;
    int i = m;
    for (int j = m; j <= n; ++j) {
      if (qabs(a[j][m - 1]) > qabs(x)) {
        x = a[j][m - 1];
        i = j;
      }
    }
    if (i != m) {
      for (int j = m - 1; j <= n; ++j) std::swap(a[i][j], a[m][j]);
      for (int j = 1; j <= n; ++j) std::swap(a[j][i], a[j][m]);
    }
    if (x != 0) {
      for (i = m + 1; i <= n; ++i) {
        Quad y = a[i][m - 1];
        if (y != 0) {
          y /= x;
          a[i][m - 1] = y;
          for (int j = m; j <= n; ++j) a[i][j] -= y * a[m][j];
          for (int j = 1; j <= n; ++j) a[j][m] += y * a[j][i];
        }
      }
    }
  }
  for (int i = 3; i <= n; ++i)
    for (int j = 1; j < i - 1; ++j) a[i][j] = 0;
}

// Francis double-shift QR on an upper Hessenberg matrix; destroys `a`.
void hessenberg_eigenvalues(QuadMat& a, int n, std::array<Quad, 5>& wr, std::array<Quad, 5>& wi) {
  Quad anorm = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += qabs(a[i][j]);

  int nn = n;
  Quad t = 0;
  Quad p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        s = qabs(a[l - 1][l - 1]) + qabs(a[l][l]);
        if (s == 0) s = anorm;
        if (qabs(a[l][l - 1]) + s == s) {
          a[l][l - 1] = 0;
          break;
        }
      }
      x = a[nn][nn];
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn--] = 0;
      } else {
        y = a[nn - 1][nn - 1];
        w = a[nn][nn - 1] * a[nn - 1][nn];
        if (l == nn - 1) {
          p = Quad(0.5) * (y - x);
          q = p * p + w;
          z = sqrtf128(qabs(q));
          x += t;
          if (q >= 0) {
            z = p + qsign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -(wi[nn] = z);
          }
          nn -= 2;
        } else {
          if (its == kMaxIterations) throw NumericalError("Hessenberg QR did not converge");
          if (its == 10 || its == 20) {
            // Exceptional shift.
            t += x;
            for (int i = 1; i <= nn; ++i) a[i][i] -= x;
            s = qabs(a[nn][nn - 1]) + qabs(a[nn - 1][nn - 2]);
            y = x = Quad(0.75) * s;
            w = Quad(-0.4375) * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a[m][m];
            r = x - z;
            s = y - z;
            p = (r * s - w) / a[m + 1][m] + a[m][m + 1];
            q = a[m + 1][m + 1] - z - r - s;
            r = a[m + 2][m + 1];
            s = qabs(p) + qabs(q) + qabs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const Quad u = qabs(a[m][m - 1]) * (qabs(q) + qabs(r));
            const Quad v = qabs(p) * (qabs(a[m - 1][m - 1]) + qabs(z) + qabs(a[m + 1][m + 1]));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a[i][i - 2] = 0;
            if (i != m + 2) a[i][i - 3] = 0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a[k][k - 1];
              q = a[k + 1][k - 1];
              r = 0;
              if (k != nn - 1) r = a[k + 2][k - 1];
              if ((x = qabs(p) + qabs(q) + qabs(r)) != 0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = qsign(sqrtf128(p * p + q * q + r * r), p)) != 0) {
              if (k == m) {
                if (l != m) a[k][k - 1] = -a[k][k - 1];
              } else {
                a[k][k - 1] = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a[k][j] + q * a[k + 1][j];
                if (k != nn - 1) {
                  p += r * a[k + 2][j];
                  a[k + 2][j] -= p * z;
                }
                a[k + 1][j] -= p * y;
                a[k][j] -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a[i][k] + y * a[i][k + 1];
                if (k != nn - 1) {
                  p += z * a[i][k + 2];
                  a[i][k + 2] -= p * r;
                }
                a[i][k + 1] -= p * q;
                a[i][k] -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

}  // namespace

ConcurrenceResult concurrence_bruteforce(const DensityMatrix& rho) {
  static const Mat4 yy = pauli::yy();

  // R12 = rho Y rho Y, formed in binary128.
  std::array<std::array<Quad, 4>, 4> r{}, ry{}, rr{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = rho(i, j);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) ry[i][j] += r[i][k] * Quad(yy[k][j]);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) rr[i][j] += ry[i][k] * ry[k][j];

  QuadMat a{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i + 1][j + 1] = rr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  std::array<Quad, 5> wr{}, wi{};
  to_hessenberg(a, 4);
  hessenberg_eigenvalues(a, 4, wr, wi);

  Vec4 lambdas{};
  for (int k = 1; k <= 4; ++k) {
    if (qabs(wi[k]) > Quad(kImaginaryTolerance))
      throw NumericalError("spin-flipped matrix has a complex eigenvalue");
    const Quad re = wr[k] > 0 ? wr[k] : Quad(0);
    lambdas[static_cast<std::size_t>(k - 1)] = static_cast<double>(sqrtf128(re));
  }
  return detail::finish_concurrence(lambdas);
}

}  // namespace ising2q
