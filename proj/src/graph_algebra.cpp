#include "dckron/graph_algebra.hpp"

#include "dckron/eigenvalues.hpp"

namespace dckron {

using Matrix = LabeledMatrixd::Matrix;

LabeledMatrixd incidence(const Network& net) {
  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(net.vertex_count()), static_cast<Eigen::Index>(net.edge_count()));
  for (std::size_t k = 0; k < net.edge_count(); ++k) {
    const auto& e = net.edges()[k];
    h(static_cast<Eigen::Index>(e.head), static_cast<Eigen::Index>(k)) = 1.0;
    h(static_cast<Eigen::Index>(e.tail), static_cast<Eigen::Index>(k)) = -1.0;
  }
  return {net.labels(), net.edge_labels(), std::move(h)};
}

LabeledMatrixd out_variation(const LabeledMatrixd& h) {
  return {h.row_labels(), h.col_labels(), h.data().cwiseMax(0.0)};
}

LabeledMatrixd in_variation(const LabeledMatrixd& h) {
  return {h.row_labels(), h.col_labels(), h.data().cwiseMin(0.0)};
}

LabeledMatrixd weighting_matrix(const Network& net) {
  Eigen::VectorXd b(static_cast<Eigen::Index>(net.edge_count()));
  for (std::size_t k = 0; k < net.edge_count(); ++k) b(static_cast<Eigen::Index>(k)) = net.edges()[k].susceptance;
  return {net.edge_labels(), net.edge_labels(), b.asDiagonal().toDenseMatrix()};
}

LabeledMatrixd adjacency(const Network& net) {
  const auto n = static_cast<Eigen::Index>(net.vertex_count());
  Matrix a = Matrix::Zero(n, n);
  for (const auto& e : net.edges()) a(static_cast<Eigen::Index>(e.head), static_cast<Eigen::Index>(e.tail)) = e.susceptance;
  return {net.labels(), net.labels(), std::move(a)};
}

LabeledMatrixd degree(const Network& net) {
  const auto a = adjacency(net);
  return {net.labels(), net.labels(), a.data().rowwise().sum().asDiagonal().toDenseMatrix()};
}

LabeledMatrixd weighted_laplacian(const Network& net) {
  const auto h = incidence(net);
  const auto ho = out_variation(h);
  Eigen::VectorXd b(static_cast<Eigen::Index>(net.edge_count()));
  for (std::size_t k = 0; k < net.edge_count(); ++k) b(static_cast<Eigen::Index>(k)) = net.edges()[k].susceptance;
  Matrix l = ho.data() * b.asDiagonal() * h.data().transpose();
  return {net.labels(), net.labels(), std::move(l)};
}

LabeledMatrixd conventional_laplacian(const Network& net) {
  return {net.labels(), net.labels(), degree(net).data() - adjacency(net).data()};
}

std::optional<std::string> LaplacianReport::first_violation() const {
  if (!square) return "square";
  if (!sign_pattern_ok) return "sign pattern";
  if (!zero_row_sums) return "row sums";
  if (!nonneg_real_parts) return "eigenvalue real parts";
  return std::nullopt;
}

LaplacianReport laplacian_report(const LabeledMatrixd& l, double tol) {
  if (!l.is_square()) throw DimensionError("laplacian_report: matrix is not square");
  const Matrix& m = l.data();
  const Eigen::Index n = m.rows();
  LaplacianReport r;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = m.row(i).sum();
    r.max_row_sum = std::max(r.max_row_sum, std::abs(s));
    if (std::abs(s) > tol) r.zero_row_sums = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j ? m(i, j) < -tol : m(i, j) > tol) r.sign_pattern_ok = false;
    }
    if (std::abs(m(i, i)) <= tol) r.zero_diag_vertices.push_back(l.row_labels()[static_cast<std::size_t>(i)]);
  }
  const auto ev = eigenvalues(m);
  r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  for (const auto& z : r.eigenvalues) {
    if (z.real() < -tol) r.nonneg_real_parts = false;
    bool inside = false;
    for (Eigen::Index i = 0; i < n && !inside; ++i) {
      const double radius = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
      inside = std::abs(z - m(i, i)) <= radius + tol;
    }
    if (!inside) r.gershgorin_ok = false;
  }
  return r;
}

}  // namespace dckron
