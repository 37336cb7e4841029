#pragma once

#include <string>
#include <vector>

#include "dckron/connectivity.hpp"
#include "dckron/graph_algebra.hpp"
#include "dckron/labeled_matrix.hpp"
#include "dckron/network.hpp"

namespace dckron {

/// M[keep,keep] - M[keep,e] M[e,e]^-1 M[e,keep] on a labeled square matrix.
/// Throws SingularBlock when M[e,e] fails the pivot test.
LabeledMatrixd schur_complement(const LabeledMatrixd& m, const std::vector<Eigen::Index>& keep);

struct ReductionResult {
  LabeledMatrixd reduced;       // L_red, |alpha| x |alpha|
  LabeledMatrixd accompanying;  // L_ac, |alpha| x |alpha^c|
  Labels retained;
  Labels eliminated;
  Network reduced_net;
  /// Outcome of the reachability precheck (true when skipped or trivially
  /// satisfied).
  bool reachable = true;
};

struct ReduceOptions {
  bool precheck = true;
  double restore_tol = kDefaultTolerance;
};

/// Kron reduction on the partition's retained/eliminated split. Throws
/// NotReducible when the precheck fails, SingularBlock when LU does.
ReductionResult kron_reduce(const Network& net, const VertexPartition& part, const ReduceOptions& opts = {});

/// Eliminates vertices one at a time (labels in order). Throws ZeroPivot.
LabeledMatrixd iterative_kron(const Network& net, const std::vector<std::string>& order);
LabeledMatrixd iterative_kron(const LabeledMatrixd& l, const std::vector<std::string>& order);

/// Directed network whose weighted Laplacian is `l`: one edge i -> j of
/// weight -l(i,j) per off-diagonal entry below -tol, scanned row-major.
/// Roles are inferred structurally. Throws NotALaplacian.
Network restore_graph(const LabeledMatrixd& l, double tol = kDefaultTolerance, std::string name = "restored");

struct PreservationReport {
  ConnectivityClass before;
  ConnectivityClass after;
  bool strong_preserved = true;  // vacuous unless `before` is strong
  bool quasi_preserved = true;   // vacuous unless `before` is quasi

  bool ok() const noexcept { return strong_preserved && quasi_preserved; }
};

PreservationReport preserved_class_check(const Network& before, const Network& after);

}  // namespace dckron
