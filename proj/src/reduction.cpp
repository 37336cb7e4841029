#include "dckron/reduction.hpp"

#include <algorithm>

#include "dckron/schur.hpp"

namespace dckron {
namespace {

Labels pick(const Labels& labels, const std::vector<Eigen::Index>& idx) {
  Labels out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(labels[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<Eigen::Index> to_eigen(const std::vector<VertexIndex>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

LabeledMatrixd schur_complement(const LabeledMatrixd& m, const std::vector<Eigen::Index>& keep) {
  if (!m.is_square()) throw DimensionError("Schur complement of a non-square matrix");
  auto r = schur_complement(m.data(), std::span<const Eigen::Index>(keep));
  return {pick(m.row_labels(), keep), pick(m.col_labels(), keep), std::move(r)};
}

ReductionResult kron_reduce(const Network& net, const VertexPartition& part, const ReduceOptions& opts) {
  const std::size_t n = net.vertex_count();
  if (part.retained.size() + part.eliminated.size() != n) {
    throw PartitionError("partition does not cover the network's vertices");
  }
  if (part.retained.size() < 2) throw PartitionError("at least two vertices must be retained");

  ReductionResult out;
  if (opts.precheck && !part.eliminated.empty()) {
    out.reachable = is_reachable_subset(net, part.retained);
    if (!out.reachable) {
      throw NotReducible("some eliminated vertex has no directed path to the retained set");
    }
  }
  const auto l = weighted_laplacian(net);
  const auto keep = to_eigen(part.retained);
  KronBlocks<double> blocks;
  try {
    blocks = kron_blocks(l.data(), std::span<const Eigen::Index>(keep));
  } catch (const SingularBlock&) {
    throw SingularBlock("LU of the eliminated block hit a pivot below 1e-12 (relative)");
  }
  const auto labels = net.labels();
  out.retained = pick(labels, keep);
  out.eliminated = pick(labels, to_eigen(part.eliminated));
  out.reduced = LabeledMatrixd(out.retained, out.retained, std::move(blocks.reduced));
  out.accompanying = LabeledMatrixd(out.retained, out.eliminated, std::move(blocks.accompanying));

  // Restored topology, carrying over declared roles and attachments.
  const auto restored = restore_graph(out.reduced, opts.restore_tol, net.name() + "-reduced");
  std::vector<Vertex> vertices;
  for (auto v : part.retained) vertices.push_back(net.vertices()[v]);
  std::vector<EdgeSpec> edges;
  for (const auto& e : restored.edges()) {
    edges.push_back({restored.label(e.head), restored.label(e.tail), e.susceptance});
  }
  out.reduced_net = Network(restored.name(), std::move(vertices), edges);
  return out;
}

LabeledMatrixd iterative_kron(const LabeledMatrixd& l, const std::vector<std::string>& order) {
  if (!l.is_square()) throw DimensionError("iterative Kron reduction of a non-square matrix");
  const auto& labels = l.row_labels();
  std::vector<Eigen::Index> idx;
  for (const auto& name : order) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw ValidationError("unknown vertex '" + name + "'");
    idx.push_back(it - labels.begin());
  }
  LabeledMatrixd::Matrix m = l.data();
  const auto failed = iterative_eliminate(m, std::span<const Eigen::Index>(idx));
  if (failed >= 0) throw ZeroPivot(static_cast<std::size_t>(failed) + 1, order[static_cast<std::size_t>(failed)]);
  Labels kept;
  for (const auto& name : labels)
    if (std::find(order.begin(), order.end(), name) == order.end()) kept.push_back(name);
  return {kept, kept, std::move(m)};
}

LabeledMatrixd iterative_kron(const Network& net, const std::vector<std::string>& order) {
  return iterative_kron(weighted_laplacian(net), order);
}

Network restore_graph(const LabeledMatrixd& l, double tol, std::string name) {
  if (!l.is_square()) throw NotALaplacian("square");
  if (l.row_labels() != l.col_labels()) throw NotALaplacian("row and column labels differ");
  const auto& m = l.data();
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i == j ? m(i, j) < -tol : m(i, j) > tol) throw NotALaplacian("sign pattern");
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(m.row(i).sum()) > tol) throw NotALaplacian("row sums");

  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> in(static_cast<std::size_t>(n), 0), out(static_cast<std::size_t>(n), 0);
  const auto& labels = l.row_labels();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && m(i, j) < -tol) {
        edges.push_back({labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)], -m(i, j)});
        ++out[static_cast<std::size_t>(i)];
        ++in[static_cast<std::size_t>(j)];
      }
    }
  }
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Vertex v{labels[i], {}};
    if (in[i] == 0 && out[i] > 0) v.role.kind = RoleKind::Source;
    if (out[i] == 0 && in[i] > 0) v.role.kind = RoleKind::Sink;
    vertices.push_back(std::move(v));
  }
  return Network(std::move(name), std::move(vertices), edges);
}

PreservationReport preserved_class_check(const Network& before, const Network& after) {
  PreservationReport r;
  r.before = connectivity_class(before);
  r.after = connectivity_class(after);
  if (r.before.strongly()) r.strong_preserved = r.after.strongly();
  if (r.before.quasi()) r.quasi_preserved = r.after.quasi();
  return r;
}

}  // namespace dckron
