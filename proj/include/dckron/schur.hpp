#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <span>
#include <vector>

#include "dckron/errors.hpp"
#include "dckron/pivoted_lu.hpp"

namespace dckron {

inline constexpr double kPivotThreshold = 1e-12;

/// Complement of `keep` in [0, n), ascending.
inline std::vector<Eigen::Index> complement_indices(Eigen::Index n, std::span<const Eigen::Index> keep) {
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (auto k : keep) {
    if (k < 0 || k >= n) throw DimensionError("index out of range");
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < n; ++i)
    if (!kept[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

template <typename Scalar, int MaxN = Eigen::Dynamic>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, 0, MaxN, MaxN>;

/// Reduced matrix M/M[e,e] together with the accompanying matrix
/// -M[k,e] * M[e,e]^-1, both from a single LU factorization of M[e,e].
template <typename Scalar, int MaxN = Eigen::Dynamic>
struct KronBlocks {
  SquareMatrix<Scalar, MaxN> reduced;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, 0, MaxN, MaxN> accompanying;
};

/// Partitioned Schur complement with respect to the kept rows/columns.
/// Throws SingularBlock when the eliminated block fails the pivot test.
template <int MaxN = Eigen::Dynamic, typename Derived>
KronBlocks<typename Derived::Scalar, MaxN> kron_blocks(const Eigen::MatrixBase<Derived>& m,
                                                        std::span<const Eigen::Index> keep,
                                                        typename Derived::Scalar threshold = kPivotThreshold) {
  using Scalar = typename Derived::Scalar;
  using Block = SquareMatrix<Scalar, MaxN>;
  if (m.rows() != m.cols()) throw DimensionError("Schur complement of a non-square matrix");
  const auto elim = complement_indices(m.rows(), keep);
  const auto nk = static_cast<Eigen::Index>(keep.size());
  const auto ne = static_cast<Eigen::Index>(elim.size());

  Block kk(nk, nk), ke(nk, ne), ek(ne, nk), ee(ne, ne);
  for (Eigen::Index i = 0; i < nk; ++i) {
    for (Eigen::Index j = 0; j < nk; ++j) kk(i, j) = m(keep[i], keep[j]);
    for (Eigen::Index j = 0; j < ne; ++j) ke(i, j) = m(keep[i], elim[j]);
  }
  for (Eigen::Index i = 0; i < ne; ++i) {
    for (Eigen::Index j = 0; j < nk; ++j) ek(i, j) = m(elim[i], keep[j]);
    for (Eigen::Index j = 0; j < ne; ++j) ee(i, j) = m(elim[i], elim[j]);
  }

  KronBlocks<Scalar, MaxN> out;
  if (ne == 0) {
    out.reduced = kk;
    out.accompanying.resize(nk, 0);
    return out;
  }
  const PivotedLu<Block> lu(ee, threshold);
  if (lu.singular()) throw SingularBlock("eliminated block is singular");
  // M[e,e]^-1 * [M[e,k] | I], one factorization for both products.
  Block rhs(ne, nk + ne);
  rhs.leftCols(nk) = ek;
  rhs.rightCols(ne).setIdentity();
  const auto sol = lu.solve(rhs);
  out.reduced = kk - ke * sol.leftCols(nk);
  out.accompanying = -ke * sol.rightCols(ne);
  return out;
}

template <int MaxN = Eigen::Dynamic, typename Derived>
SquareMatrix<typename Derived::Scalar, MaxN> schur_complement(const Eigen::MatrixBase<Derived>& m,
                                                              std::span<const Eigen::Index> keep,
                                                              typename Derived::Scalar threshold = kPivotThreshold) {
  return kron_blocks<MaxN>(m, keep, threshold).reduced;
}

/// Removes one vertex from a square matrix by a 1x1 pivot step.
/// Returns false (leaving `m` untouched) when |m(k,k)| <= threshold * max|m|.
template <typename MatrixType>
bool eliminate_one(MatrixType& m, Eigen::Index k, typename MatrixType::Scalar threshold = kPivotThreshold) {
  using Scalar = typename MatrixType::Scalar;
  const Eigen::Index n = m.rows();
  const Scalar scale = m.cwiseAbs().maxCoeff();
  const Scalar pivot = m(k, k);
  if (!(std::abs(pivot) > threshold * scale)) return false;
  MatrixType next(n - 1, n - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == k) continue;
    const Scalar f = m(i, k) / pivot;
    for (Eigen::Index j = 0, c = 0; j < n; ++j) {
      if (j == k) continue;
      next(r, c++) = m(i, j) - f * m(k, j);
    }
    ++r;
  }
  m = std::move(next);
  return true;
}

/// Sequential single-vertex Schur complements, eliminating original indices
/// in the given order. Returns the index of the failing step, or -1.
template <typename MatrixType>
Eigen::Index iterative_eliminate(MatrixType& m, std::span<const Eigen::Index> order,
                                 typename MatrixType::Scalar threshold = kPivotThreshold) {
  std::vector<Eigen::Index> alive(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<Eigen::Index>(i);
  for (std::size_t step = 0; step < order.size(); ++step) {
    const auto it = std::find(alive.begin(), alive.end(), order[step]);
    if (it == alive.end()) throw DimensionError("vertex eliminated twice or out of range");
    const auto pos = static_cast<Eigen::Index>(it - alive.begin());
    if (!eliminate_one(m, pos, threshold)) return static_cast<Eigen::Index>(step);
    alive.erase(it);
  }
  return -1;
}

}  // namespace dckron
