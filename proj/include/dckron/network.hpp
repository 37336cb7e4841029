#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dckron {

/// Dense 0-based vertex position; fixes every matrix row/column order.
using VertexIndex = std::size_t;

enum class RoleKind { Source, Sink, Interior };

/// External attachments of a bus. Any attachment pins the vertex to the
/// boundary; `pinned` marks boundary vertices without gen/load (tie buses).
struct Attachment {
  bool generator = false;
  bool loading = false;
  bool pinned = false;

  bool any() const noexcept { return generator || loading || pinned; }
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct VertexRole {
  RoleKind kind = RoleKind::Interior;
  Attachment attachment;
  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct Vertex {
  std::string label;
  VertexRole role;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Directed line head -> tail with positive susceptance.
struct DirectedEdge {
  VertexIndex head = 0;
  VertexIndex tail = 0;
  double susceptance = 1.0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Edge description by labels, used to build a Network.
struct EdgeSpec {
  std::string head;
  std::string tail;
  double susceptance = 1.0;
};

/// Immutable directed weighted graph. Construction rejects self-loops,
/// non-positive or non-finite susceptances, parallel edges, duplicate
/// labels and unknown endpoints.
class Network {
 public:
  Network() = default;
  Network(std::string name, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& label(VertexIndex v) const { return vertices_.at(v).label; }
  const VertexRole& role(VertexIndex v) const { return vertices_.at(v).role; }
  std::vector<std::string> labels() const;
  std::vector<std::string> edge_labels() const;

  std::optional<VertexIndex> find(std::string_view label) const;
  /// Throws ValidationError on an unknown label.
  VertexIndex index_of(std::string_view label) const;
  std::vector<VertexIndex> indices_of(const std::vector<std::string>& labels) const;

  /// Susceptance of head -> tail, 0 when absent.
  double weight(VertexIndex head, VertexIndex tail) const;
  bool has_edge(VertexIndex head, VertexIndex tail) const { return weight(head, tail) > 0.0; }

  std::size_t out_degree(VertexIndex v) const { return out_.at(v).size(); }
  std::size_t in_degree(VertexIndex v) const { return in_.at(v).size(); }
  /// Tail vertices of edges leaving v.
  const std::vector<VertexIndex>& successors(VertexIndex v) const { return out_.at(v); }
  const std::vector<VertexIndex>& predecessors(VertexIndex v) const { return in_.at(v); }

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<DirectedEdge> edges_;
  std::map<std::string, VertexIndex, std::less<>> index_;
  std::vector<std::vector<VertexIndex>> out_;
  std::vector<std::vector<VertexIndex>> in_;
};

/// Structural equality: same name, vertices (labels, roles) and edges in
/// the same order.
bool operator==(const Network& a, const Network& b);

/// Equality after sorting edges by (head label, tail label).
bool equivalent(const Network& a, const Network& b);

/// Orders labels numerically when both are integers, lexicographically
/// otherwise.
bool label_less(std::string_view a, std::string_view b);

std::string_view to_string(RoleKind kind);

// ---- .dgnet text format ---------------------------------------------------

struct ParseWarning {
  int line = 0;
  std::string message;
};

struct ParsedNetwork {
  Network network;
  std::vector<ParseWarning> warnings;
};

/// Parses `.dgnet` text. Reactances x < 0 become b = -1/x; lines with
/// x >= 0 are dropped and reported as warnings. Throws ParseError.
ParsedNetwork parse_network(std::string_view text);
ParsedNetwork read_network_file(const std::string& path);

/// Canonical `.dgnet` text; susceptances use shortest round-trip digits.
std::string serialize_network(const Network& net);

// ---- validation -------------------------------------------------------------

enum class Severity { Warning, Failure };

struct Violation {
  std::string code;  // "source-with-in-edge", "sink-with-out-edge", "isolated-vertex", "min-size"
  std::string vertex;
  Severity severity = Severity::Failure;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const;  // no failures; warnings allowed
  bool empty() const noexcept { return violations.empty(); }
  bool has(std::string_view code) const;
};

ValidationReport validate_network(const Network& net);

// ---- builtin cases ----------------------------------------------------------

/// Names accepted by builtin_case.
const std::vector<std::string>& builtin_case_names();

/// Test feeders with unit susceptances: ieee3, ieee5, ieee9, ieee14,
/// rts96-area4. Throws ValidationError for other names.
Network builtin_case(std::string_view name);

}  // namespace dckron
