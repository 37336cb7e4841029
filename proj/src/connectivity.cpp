#include "dckron/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "dckron/errors.hpp"

namespace dckron {
namespace {

bool is_boundary(const Network& net, VertexIndex v) {
  const auto& role = net.role(v);
  if (role.kind != RoleKind::Interior || role.attachment.any()) return true;
  const auto in = net.in_degree(v);
  const auto out = net.out_degree(v);
  return (in == 0) != (out == 0);
}

std::vector<VertexIndex> sorted_unique(std::vector<VertexIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

VertexPartition classify_vertices(const Network& net) {
  VertexPartition part;
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    (is_boundary(net, v) ? part.boundary : part.interior).push_back(v);
  }
  return part;
}

VertexPartition choose_retained(VertexPartition part, const RetentionRequest& req) {
  const std::size_t n = part.boundary.size() + part.interior.size();
  std::vector<bool> boundary(n, false);
  for (auto v : part.boundary) boundary[v] = true;

  std::vector<bool> eliminate(n, false);
  auto mark = [&](const std::vector<VertexIndex>& set) {
    for (auto v : set) {
      if (v >= n) throw PartitionError("vertex index out of range");
      eliminate[v] = true;
    }
  };
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, request::AllInterior>) {
          mark(part.interior);
        } else if constexpr (std::is_same_v<T, request::EliminateSet>) {
          mark(r.vertices);
        } else if constexpr (std::is_same_v<T, request::RetainSet>) {
          std::vector<bool> keep(n, false);
          for (auto v : r.vertices) {
            if (v >= n) throw PartitionError("vertex index out of range");
            keep[v] = true;
          }
          for (VertexIndex v = 0; v < n; ++v) eliminate[v] = !keep[v];
        } else {
          const Network& net = *r.net;
          if (net.vertex_count() != n) throw PartitionError("partition does not belong to this network");
          std::vector<bool> keep = boundary;
          for (const auto& e : net.edges()) {
            if (boundary[e.head]) keep[e.tail] = true;
            if (boundary[e.tail]) keep[e.head] = true;
          }
          for (VertexIndex v = 0; v < n; ++v) eliminate[v] = !keep[v];
        }
      },
      req);

  part.retained.clear();
  part.eliminated.clear();
  for (VertexIndex v = 0; v < n; ++v) {
    if (eliminate[v] && boundary[v]) {
      throw PartitionError("boundary vertices cannot be eliminated (vertex index " + std::to_string(v) + ")");
    }
    (eliminate[v] ? part.eliminated : part.retained).push_back(v);
  }
  if (part.retained.size() < 2) throw PartitionError("at least two vertices must be retained");
  return part;
}

bool is_reachable_subset(const Network& net, const std::vector<VertexIndex>& alpha) {
  const auto set = sorted_unique(alpha);
  if (set.size() < 2) throw PartitionError("retained set needs at least two vertices");
  if (set.size() >= net.vertex_count()) throw PartitionError("retained set must be a proper subset");
  if (set.back() >= net.vertex_count()) throw PartitionError("vertex index out of range");
  // Backward search from alpha: a vertex reaches alpha iff alpha reaches it
  // along reversed edges.
  std::vector<bool> seen(net.vertex_count(), false);
  std::deque<VertexIndex> queue;
  for (auto v : set) {
    seen[v] = true;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto u : net.predecessors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<bool> reachable_from(const Network& net, VertexIndex from) {
  std::vector<bool> seen(net.vertex_count(), false);
  std::vector<VertexIndex> stack{from};
  seen.at(from) = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : net.successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::vector<VertexIndex>> strongly_connected_components(const Network& net) {
  const std::size_t n = net.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexIndex> stack;
  std::vector<std::vector<VertexIndex>> components;
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next successor position).
  std::vector<std::pair<VertexIndex, std::size_t>> frames;
  for (VertexIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = net.successors(v);
      if (pos < succ.size()) {
        const auto w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexIndex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<VertexIndex> comp;
        VertexIndex w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

std::string_view to_string(ConnectivityClass::Kind kind) {
  switch (kind) {
    case ConnectivityClass::Kind::StronglyConnected:
      return "strongly-connected";
    case ConnectivityClass::Kind::QuasiStronglyConnected:
      return "quasi-strongly-connected";
    case ConnectivityClass::Kind::Neither:
      break;
  }
  return "neither";
}

ConnectivityClass connectivity_class(const Network& net) {
  ConnectivityClass out;
  const std::size_t n = net.vertex_count();
  if (n == 0) return out;
  const auto comps = strongly_connected_components(net);
  if (comps.size() == 1) {
    out.kind = ConnectivityClass::Kind::StronglyConnected;
    return out;
  }
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<bool> has_in(comps.size(), false);
  for (const auto& e : net.edges()) {
    if (comp_of[e.head] != comp_of[e.tail]) has_in[comp_of[e.tail]] = true;
  }
  // Quasi-strong connectivity <=> the condensation has a single source
  // component; every vertex of that component is a root.
  std::optional<std::size_t> top;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (has_in[c]) continue;
    if (top) return out;
    top = c;
  }
  const auto& roots = comps[*top];
  const auto best = *std::min_element(roots.begin(), roots.end(), [&](VertexIndex a, VertexIndex b) {
    return label_less(net.label(a), net.label(b));
  });
  const auto seen = reachable_from(net, best);
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return out;
  out.kind = ConnectivityClass::Kind::QuasiStronglyConnected;
  out.root = best;
  return out;
}

double walk_product(const Network& net, const std::vector<std::string>& walk) {
  if (walk.size() < 2) throw ValidationError("a walk needs at least two vertices");
  const auto idx = net.indices_of(walk);
  double product = 1.0;
  for (std::size_t i = 1; i < idx.size(); ++i) product *= net.weight(idx[i - 1], idx[i]);
  return product;
}

}  // namespace dckron
