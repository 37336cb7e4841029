#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dckron/network.hpp"

namespace dckron {

/// Boundary/interior split plus the retained/eliminated split of one
/// reduction. All sets hold ascending vertex indices.
struct VertexPartition {
  std::vector<VertexIndex> boundary;
  std::vector<VertexIndex> interior;
  std::vector<VertexIndex> retained;
  std::vector<VertexIndex> eliminated;

  bool has_elimination_set() const noexcept { return !retained.empty(); }
};

/// Sources, sinks (declared or structural) and pinned vertices are boundary.
VertexPartition classify_vertices(const Network& net);

namespace request {
struct AllInterior {};
struct EliminateSet {
  std::vector<VertexIndex> vertices;
};
struct RetainSet {
  std::vector<VertexIndex> vertices;
};
/// Keeps the boundary and every vertex joined to it by an edge.
struct BoundaryPlusNeighbors {
  const Network* net;
};
}  // namespace request

using RetentionRequest = std::variant<request::AllInterior, request::EliminateSet, request::RetainSet,
                                      request::BoundaryPlusNeighbors>;

/// Fills retained/eliminated. Throws PartitionError when a boundary vertex
/// would be eliminated or fewer than two vertices remain.
VertexPartition choose_retained(VertexPartition part, const RetentionRequest& req);

/// Every vertex outside `alpha` has a directed path into `alpha`.
/// Throws PartitionError unless alpha is a proper subset with |alpha| >= 2.
bool is_reachable_subset(const Network& net, const std::vector<VertexIndex>& alpha);

struct ConnectivityClass {
  enum class Kind { StronglyConnected, QuasiStronglyConnected, Neither };
  Kind kind = Kind::Neither;
  /// Smallest-label root for QuasiStronglyConnected.
  std::optional<VertexIndex> root;

  bool strongly() const noexcept { return kind == Kind::StronglyConnected; }
  /// Strongly connected graphs count as quasi-strongly connected.
  bool quasi() const noexcept { return kind != Kind::Neither; }
};

std::string_view to_string(ConnectivityClass::Kind kind);

/// Strongly connected components (Tarjan), each listed in discovery order;
/// components come out in reverse topological order of the condensation.
std::vector<std::vector<VertexIndex>> strongly_connected_components(const Network& net);

ConnectivityClass connectivity_class(const Network& net);

/// Vertices reachable from `from` (including itself).
std::vector<bool> reachable_from(const Network& net, VertexIndex from);

/// Product of adjacency weights along consecutive pairs; 0 if a hop is
/// missing. Throws ValidationError on an unknown label or a walk shorter
/// than two vertices.
double walk_product(const Network& net, const std::vector<std::string>& walk);

}  // namespace dckron
