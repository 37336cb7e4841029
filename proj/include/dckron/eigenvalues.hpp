#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "dckron/errors.hpp"

namespace dckron {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Reduces a square matrix in place to upper Hessenberg form by stabilized
/// elementary similarity transforms (Gaussian elimination with pivoting).
template <typename Derived>
void reduce_to_hessenberg(Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index n = a.rows();
  for (Index m = 1; m + 1 < n; ++m) {
    Scalar x(0);
    Index pivot = m;
    for (Index j = m; j < n; ++j) {
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        pivot = j;
      }
    }
    if (pivot != m) {
      a.row(pivot).tail(n - m + 1).swap(a.row(m).tail(n - m + 1));
      a.col(pivot).swap(a.col(m));
    }
    if (x == Scalar(0)) continue;
    for (Index i = m + 1; i < n; ++i) {
      Scalar y = a(i, m - 1);
      if (y == Scalar(0)) continue;
      y /= x;
      a(i, m - 1) = y;
      a.row(i).tail(n - m) -= y * a.row(m).tail(n - m);
      a.col(m) += y * a.col(i);
    }
  }
  for (Index i = 2; i < n; ++i) a.row(i).head(i - 1).setZero();
}

/// Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR
/// iteration with deflation. Plain shifts are taken from the trailing 2x2
/// block; exceptional shifts are injected after 10 and 20 stalled sweeps.
template <typename Derived>
ComplexVector<typename Derived::Scalar> hessenberg_eigenvalues(Eigen::MatrixBase<Derived>& a,
                                                               int max_sweeps = 60) {
  using Scalar = typename Derived::Scalar;
  using Complex = std::complex<Scalar>;
  using Index = Eigen::Index;
  const Index n = a.rows();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  auto sign = [](Scalar mag, Scalar s) { return s >= Scalar(0) ? std::abs(mag) : -std::abs(mag); };

  ComplexVector<Scalar> w(n);
  Scalar anorm(0);
  for (Index i = 0; i < n; ++i)
    for (Index j = std::max<Index>(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  Index nn = n - 1;
  Scalar t(0);
  while (nn >= 0) {
    int its = 0;
    Index l = 0;
    do {
      for (l = nn; l > 0; --l) {
        Scalar s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == Scalar(0)) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = Scalar(0);
          break;
        }
      }
      Scalar x = a(nn, nn);
      if (l == nn) {
        w(nn--) = Complex(x + t, 0);
        continue;
      }
      Scalar y = a(nn - 1, nn - 1);
      Scalar ww = a(nn, nn - 1) * a(nn - 1, nn);
      if (l == nn - 1) {
        const Scalar p = Scalar(0.5) * (y - x);
        const Scalar q = p * p + ww;
        Scalar z = std::sqrt(std::abs(q));
        x += t;
        if (q >= Scalar(0)) {
          z = p + sign(z, p);
          w(nn - 1) = w(nn) = Complex(x + z, 0);
          if (z != Scalar(0)) w(nn) = Complex(x - ww / z, 0);
        } else {
          w(nn) = Complex(x + p, -z);
          w(nn - 1) = std::conj(w(nn));
        }
        nn -= 2;
        continue;
      }
      if (its == max_sweeps) throw Error("eigenvalue iteration did not converge");
      if (its == 10 || its == 20) {
        t += x;
        for (Index i = 0; i <= nn; ++i) a(i, i) -= x;
        const Scalar s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
        y = x = Scalar(0.75) * s;
        ww = Scalar(-0.4375) * s * s;
      }
      ++its;
      Index m = nn - 2;
      Scalar p(0), q(0), r(0), z(0);
      for (; m >= l; --m) {
        z = a(m, m);
        r = x - z;
        Scalar s = y - z;
        p = (r * s - ww) / a(m + 1, m) + a(m, m + 1);
        q = a(m + 1, m + 1) - z - r - s;
        r = a(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        const Scalar u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
        const Scalar v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
        if (u <= eps * v) break;
      }
      for (Index i = m; i < nn - 1; ++i) {
        a(i + 2, i) = Scalar(0);
        if (i != m) a(i + 2, i - 1) = Scalar(0);
      }
      for (Index k = m; k < nn; ++k) {
        if (k != m) {
          p = a(k, k - 1);
          q = a(k + 1, k - 1);
          r = Scalar(0);
          if (k + 1 != nn) r = a(k + 2, k - 1);
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != Scalar(0)) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const Scalar s = sign(std::sqrt(p * p + q * q + r * r), p);
        if (s == Scalar(0)) continue;
        if (k == m) {
          if (l != m) a(k, k - 1) = -a(k, k - 1);
        } else {
          a(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (Index j = k; j <= nn; ++j) {
          p = a(k, j) + q * a(k + 1, j);
          if (k + 1 != nn) {
            p += r * a(k + 2, j);
            a(k + 2, j) -= p * z;
          }
          a(k + 1, j) -= p * y;
          a(k, j) -= p * x;
        }
        const Index mmin = nn < k + 3 ? nn : k + 3;
        for (Index i = l; i <= mmin; ++i) {
          p = x * a(i, k) + y * a(i, k + 1);
          if (k + 1 != nn) {
            p += z * a(i, k + 2);
            a(i, k + 2) -= p * r;
          }
          a(i, k + 1) -= p * q;
          a(i, k) -= p;
        }
      }
    } while (l < nn - 1);
  }
  return w;
}

/// All eigenvalues of a real square matrix (unordered).
template <typename Derived>
ComplexVector<typename Derived::Scalar> eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("eigenvalues: matrix is not square");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
  if (a.rows() == 0) return ComplexVector<Scalar>(0);
  reduce_to_hessenberg(a);
  return hessenberg_eigenvalues(a);
}

}  // namespace dckron
