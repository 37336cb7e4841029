#include "dckron/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

#include "dckron/errors.hpp"

namespace dckron {

Network::Network(std::string name, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    const auto& label = vertices_[i].label;
    if (label.empty()) throw ValidationError("empty vertex label");
    if (!index_.emplace(label, i).second) throw ValidationError("duplicate vertex '" + label + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    const auto h = find(e.head);
    const auto t = find(e.tail);
    if (!h) throw ValidationError("unknown endpoint '" + e.head + "'");
    if (!t) throw ValidationError("unknown endpoint '" + e.tail + "'");
    if (*h == *t) throw ValidationError("self-loop at '" + e.head + "'");
    if (!(e.susceptance > 0.0) || !std::isfinite(e.susceptance)) {
      throw ValidationError("edge " + e.head + "->" + e.tail + " needs a positive finite susceptance");
    }
    if (std::find(out_[*h].begin(), out_[*h].end(), *t) != out_[*h].end()) {
      throw ValidationError("duplicate edge " + e.head + "->" + e.tail);
    }
    edges_.push_back({*h, *t, e.susceptance});
    out_[*h].push_back(*t);
    in_[*t].push_back(*h);
  }
}

std::vector<std::string> Network::labels() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.label);
  return out;
}

std::vector<std::string> Network::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(label(e.head) + "->" + label(e.tail));
  return out;
}

std::optional<VertexIndex> Network::find(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Network::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ValidationError("unknown vertex '" + std::string(label) + "'");
}

std::vector<VertexIndex> Network::indices_of(const std::vector<std::string>& labels) const {
  std::vector<VertexIndex> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return out;
}

double Network::weight(VertexIndex head, VertexIndex tail) const {
  for (const auto& e : edges_)
    if (e.head == head && e.tail == tail) return e.susceptance;
  return 0.0;
}

bool operator==(const Network& a, const Network& b) {
  return a.name() == b.name() && a.vertices() == b.vertices() && a.edges() == b.edges();
}

bool equivalent(const Network& a, const Network& b) {
  if (a.name() != b.name() || a.vertices() != b.vertices() || a.edge_count() != b.edge_count()) return false;
  auto sorted = [](const Network& n) {
    std::vector<std::tuple<std::string, std::string, double>> out;
    for (const auto& e : n.edges()) out.emplace_back(n.label(e.head), n.label(e.tail), e.susceptance);
    std::sort(out.begin(), out.end());
    return out;
  };
  return sorted(a) == sorted(b);
}

bool label_less(std::string_view a, std::string_view b) {
  long long x = 0;
  long long y = 0;
  const auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
  const auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
  const bool na = ra.ec == std::errc() && ra.ptr == a.data() + a.size();
  const bool nb = rb.ec == std::errc() && rb.ptr == b.data() + b.size();
  if (na && nb && x != y) return x < y;
  return a < b;
}

std::string_view to_string(RoleKind kind) {
  switch (kind) {
    case RoleKind::Source:
      return "source";
    case RoleKind::Sink:
      return "sink";
    case RoleKind::Interior:
      break;
  }
  return "interior";
}

bool ValidationReport::ok() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.severity == Severity::Failure; });
}

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

ValidationReport validate_network(const Network& net) {
  ValidationReport report;
  if (net.vertex_count() < 2) report.violations.push_back({"min-size", "", Severity::Failure});
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    const auto& label = net.label(v);
    const auto kind = net.role(v).kind;
    if (kind == RoleKind::Source && net.in_degree(v) > 0) {
      report.violations.push_back({"source-with-in-edge", label, Severity::Failure});
    }
    if (kind == RoleKind::Sink && net.out_degree(v) > 0) {
      report.violations.push_back({"sink-with-out-edge", label, Severity::Failure});
    }
    if (net.in_degree(v) == 0 && net.out_degree(v) == 0) {
      report.violations.push_back({"isolated-vertex", label, Severity::Warning});
    }
  }
  return report;
}

}  // namespace dckron
