#include "dckron/powerflow.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "dckron/errors.hpp"
#include "dckron/graph_algebra.hpp"

namespace dckron {
namespace {

Eigen::VectorXd select_values(const Labels& have, const Eigen::VectorXd& values, const Labels& wanted,
                              const char* what) {
  if (static_cast<Eigen::Index>(have.size()) != values.size()) throw DimensionError(std::string(what) + ": label/value count mismatch");
  std::map<std::string_view, Eigen::Index> pos;
  for (std::size_t i = 0; i < have.size(); ++i) pos.emplace(have[i], static_cast<Eigen::Index>(i));
  Eigen::VectorXd out(static_cast<Eigen::Index>(wanted.size()));
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    const auto it = pos.find(wanted[i]);
    if (it == pos.end()) throw DimensionError(std::string(what) + ": missing entry for vertex '" + wanted[i] + "'");
    out(static_cast<Eigen::Index>(i)) = values(it->second);
  }
  return out;
}

}  // namespace

AngleProfile AngleProfile::select(const Labels& wanted) const {
  return {wanted, select_values(labels, shifts, wanted, "angles"), alpha};
}

AngleProfile AngleProfile::shifted(double c) const { return {labels, shifts, alpha + c}; }

PowerVector PowerVector::select(const Labels& wanted) const {
  return {wanted, select_values(labels, values, wanted, "powers")};
}

FlowState evaluate_flow(const Network& net, const AngleProfile& theta) {
  FlowState s;
  s.theta = theta.select(net.labels());
  const auto h = incidence(net);
  const auto ho = out_variation(h);
  Eigen::VectorXd b(static_cast<Eigen::Index>(net.edge_count()));
  for (std::size_t k = 0; k < net.edge_count(); ++k) b(static_cast<Eigen::Index>(k)) = net.edges()[k].susceptance;
  // Each incidence column sums to zero, so alpha drops out of phi exactly.
  s.phi = h.data().transpose() * s.theta.shifts;
  s.p_edge = -(b.asDiagonal() * s.phi);
  s.p_v = -(ho.data() * s.p_edge);
  return s;
}

ReducedFlow reduced_flow(const ReductionResult& result, const AngleProfile& theta_alpha,
                         const PowerVector& p_v_eliminated, const FlowState* full) {
  ReducedFlow out;
  const auto th = theta_alpha.select(result.retained);
  const auto pe = p_v_eliminated.select(result.eliminated);
  if (result.reduced.rows() != th.shifts.size() || result.accompanying.cols() != pe.values.size()) {
    throw DimensionError("reduced_flow: dimension mismatch");
  }
  // L_red has zero row sums, so alpha contributes nothing here either.
  out.p_vred = {result.retained, result.reduced.data() * th.shifts};
  out.transferred = {result.retained, result.accompanying.data() * pe.values};
  if (full != nullptr) {
    const auto p = full->extraction();
    const auto p_alpha = p.select(result.retained).values;
    const auto p_elim = p.select(result.eliminated).values;
    const auto th_full = full->theta.select(result.retained).shifts;
    const Eigen::VectorXd lhs = p_alpha + result.accompanying.data() * p_elim;
    const Eigen::VectorXd rhs = result.reduced.data() * th_full;
    out.residual = lhs.size() == 0 ? 0.0 : (lhs - rhs).cwiseAbs().maxCoeff();
  }
  return out;
}

Network orient_edges(std::string name, std::vector<Vertex> buses, const std::vector<UndirectedLine>& lines) {
  std::map<std::string, RoleKind, std::less<>> role;
  for (const auto& v : buses) role.emplace(v.label, v.role.kind);
  auto kind = [&](const std::string& label) {
    const auto it = role.find(label);
    if (it == role.end()) throw ValidationError("line endpoint '" + label + "' has no role");
    return it->second;
  };
  std::map<std::string, bool, std::less<>> sink_adjacent;
  for (const auto& line : lines) {
    if (kind(line.b) == RoleKind::Sink) sink_adjacent[line.a] = true;
    if (kind(line.a) == RoleKind::Sink) sink_adjacent[line.b] = true;
  }

  std::vector<EdgeSpec> edges;
  std::vector<std::string> unresolved;
  for (const auto& line : lines) {
    const auto ka = kind(line.a);
    const auto kb = kind(line.b);
    auto push = [&](const std::string& head, const std::string& tail) {
      edges.push_back({head, tail, line.susceptance});
    };
    if (ka == kb && ka != RoleKind::Interior) {
      unresolved.push_back(line.a + "-" + line.b);
    } else if (kb == RoleKind::Sink || ka == RoleKind::Source) {
      push(line.a, line.b);
    } else if (ka == RoleKind::Sink || kb == RoleKind::Source) {
      push(line.b, line.a);
    } else {
      const bool a_adj = sink_adjacent.count(line.a) > 0;
      const bool b_adj = sink_adjacent.count(line.b) > 0;
      if (a_adj == b_adj) {
        unresolved.push_back(line.a + "-" + line.b);
      } else if (b_adj) {
        push(line.a, line.b);
      } else {
        push(line.b, line.a);
      }
    }
  }
  if (!unresolved.empty()) {
    std::string msg = "cannot orient line(s):";
    for (const auto& u : unresolved) msg += " " + u;
    throw UnorientableLine(msg);
  }
  return Network(std::move(name), std::move(buses), edges);
}

ProfileBuild build_angle_profile(const Network& net, const Eigen::VectorXd& shifts, double alpha) {
  if (shifts.size() != static_cast<Eigen::Index>(net.vertex_count())) {
    throw DimensionError("one phase shift per vertex required");
  }
  for (Eigen::Index i = 0; i < shifts.size(); ++i) {
    if (!(std::abs(shifts(i)) <= kMaxPhaseShift)) {
      throw ValidationError("phase shift of vertex '" + net.label(static_cast<VertexIndex>(i)) +
                            "' outside [-0.6, 0.6]");
    }
  }
  ProfileBuild out;
  out.profile = {net.labels(), shifts, alpha};
  for (const auto& e : net.edges()) {
    const double phi = shifts(static_cast<Eigen::Index>(e.head)) - shifts(static_cast<Eigen::Index>(e.tail));
    if (phi < 0.0) out.warnings.push_back({net.label(e.head), net.label(e.tail), phi});
  }
  return out;
}

PowerVector parse_vector(std::string_view text) {
  PowerVector out;
  std::vector<double> values;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string label, value, extra;
    if (!(ls >> label) || label.front() == '#') continue;
    if (!(ls >> value) || (ls >> extra && extra.front() != '#')) throw ParseError(lineno, "expected '<vertex-label> <value>'");
    double v = 0.0;
    const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
    if (r.ec != std::errc() || r.ptr != value.data() + value.size() || !std::isfinite(v)) {
      throw ParseError(lineno, "bad number '" + value + "'");
    }
    if (std::find(out.labels.begin(), out.labels.end(), label) != out.labels.end()) {
      throw ParseError(lineno, "duplicate entry for vertex '" + label + "'");
    }
    out.labels.push_back(label);
    values.push_back(v);
  }
  out.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return out;
}

std::string format_vector(const PowerVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.labels.size(); ++i) {
    os << v.labels[i] << ' ' << format_value(v.values(static_cast<Eigen::Index>(i))) << '\n';
  }
  return os.str();
}

std::string format_angle(const AngleProfile& p, std::size_t i) {
  const double s = p.shifts(static_cast<Eigen::Index>(i));
  std::string out = s < 0.0 ? "alpha-" : "alpha+";
  out += format_value(std::abs(s));
  return out;
}

}  // namespace dckron
