#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace dckron {

/// LU factorization with partial (row) pivoting, PA = LU.
///
/// Singularity is decided against a relative threshold: a pivot is rejected
/// when |pivot| <= threshold * max|A_ij|. An all-zero matrix is singular.
/// Works with any Eigen dense type, including fixed-max-size matrices.
template <typename MatrixType>
class PivotedLu {
 public:
  using Scalar = typename MatrixType::Scalar;
  using Index = Eigen::Index;

  PivotedLu() = default;

  template <typename Derived>
  explicit PivotedLu(const Eigen::MatrixBase<Derived>& a, Scalar threshold = Scalar(1e-12)) {
    compute(a, threshold);
  }

  template <typename Derived>
  PivotedLu& compute(const Eigen::MatrixBase<Derived>& a, Scalar threshold = Scalar(1e-12)) {
    eigen_assert(a.rows() == a.cols());
    lu_ = a;
    const Index n = lu_.rows();
    perm_.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
    singular_ = false;
    failed_column_ = -1;
    const Scalar scale = n > 0 ? lu_.cwiseAbs().maxCoeff() : Scalar(0);
    const Scalar cutoff = threshold * scale;
    if (n > 0 && scale == Scalar(0)) {
      singular_ = true;
      failed_column_ = 0;
      return *this;
    }
    for (Index k = 0; k < n; ++k) {
      Index p = k;
      Scalar best = std::abs(lu_(k, k));
      for (Index i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          p = i;
        }
      }
      if (best <= cutoff) {
        singular_ = true;
        failed_column_ = k;
        return *this;
      }
      if (p != k) {
        lu_.row(k).swap(lu_.row(p));
        std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(p)]);
      }
      for (Index i = k + 1; i < n; ++i) {
        const Scalar f = lu_(i, k) / lu_(k, k);
        lu_(i, k) = f;
        if (f != Scalar(0)) {
          lu_.row(i).tail(n - k - 1) -= f * lu_.row(k).tail(n - k - 1);
        }
      }
    }
    return *this;
  }

  bool singular() const noexcept { return singular_; }
  /// Column where elimination stopped, -1 when nonsingular.
  Index failed_column() const noexcept { return failed_column_; }
  Index size() const noexcept { return lu_.rows(); }

  /// Solves A X = B column by column.
  template <typename Derived>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Derived::ColsAtCompileTime, 0,
                MatrixType::MaxRowsAtCompileTime, Derived::MaxColsAtCompileTime>
  solve(const Eigen::MatrixBase<Derived>& b) const {
    eigen_assert(!singular_);
    eigen_assert(b.rows() == lu_.rows());
    const Index n = lu_.rows();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Derived::ColsAtCompileTime, 0,
                  MatrixType::MaxRowsAtCompileTime, Derived::MaxColsAtCompileTime>
        x(n, b.cols());
    for (Index i = 0; i < n; ++i) x.row(i) = b.row(perm_[static_cast<std::size_t>(i)]);
    for (Index i = 1; i < n; ++i) {
      x.row(i) -= lu_.row(i).head(i) * x.topRows(i);
    }
    for (Index i = n - 1; i >= 0; --i) {
      if (i + 1 < n) x.row(i) -= lu_.row(i).tail(n - i - 1) * x.bottomRows(n - i - 1);
      x.row(i) /= lu_(i, i);
    }
    return x;
  }

  Scalar determinant() const {
    if (singular_) return Scalar(0);
    Scalar det = lu_.diagonal().prod();
    std::vector<Index> p = perm_;
    for (std::size_t i = 0; i < p.size(); ++i) {
      while (p[i] != static_cast<Index>(i)) {
        std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
        det = -det;
      }
    }
    return det;
  }

 private:
  MatrixType lu_;
  std::vector<Index> perm_;
  bool singular_ = false;
  Index failed_column_ = -1;
};

}  // namespace dckron
