#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dckron/labeled_matrix.hpp"
#include "dckron/network.hpp"

namespace dckron {

inline constexpr double kDefaultTolerance = 1e-9;

/// |V| x |E| incidence: +1 at the head, -1 at the tail of each edge.
LabeledMatrixd incidence(const Network& net);
/// Head-only variation H_o (entries max(H_ij, 0)).
LabeledMatrixd out_variation(const LabeledMatrixd& h);
/// Tail-only variation H_i (entries min(H_ij, 0)); H = H_o + H_i.
LabeledMatrixd in_variation(const LabeledMatrixd& h);
/// diag(b) in edge order.
LabeledMatrixd weighting_matrix(const Network& net);
/// A_ij = b for edge i -> j.
LabeledMatrixd adjacency(const Network& net);
/// Out-degree matrix D_ii = sum_j A_ij.
LabeledMatrixd degree(const Network& net);

/// L = H_o * B * H^T.
LabeledMatrixd weighted_laplacian(const Network& net);
/// L = D - A.
LabeledMatrixd conventional_laplacian(const Network& net);

struct LaplacianReport {
  bool square = true;
  bool zero_row_sums = true;
  bool sign_pattern_ok = true;
  bool nonneg_real_parts = true;
  /// Every eigenvalue lies in some disc |z - L_ii| <= sum_{j!=i} |L_ij| (+tol).
  bool gershgorin_ok = true;
  double max_row_sum = 0.0;
  std::vector<std::complex<double>> eigenvalues;
  std::vector<std::string> zero_diag_vertices;

  bool is_laplacian() const noexcept { return zero_row_sums && sign_pattern_ok; }
  /// Name of the first failed property, in the order sign pattern, row sums,
  /// eigenvalues.
  std::optional<std::string> first_violation() const;
};

/// Checks the Laplacian properties of a square matrix. Throws DimensionError
/// on non-square input.
LaplacianReport laplacian_report(const LabeledMatrixd& l, double tol = kDefaultTolerance);

}  // namespace dckron
