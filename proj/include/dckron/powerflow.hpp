#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "dckron/network.hpp"
#include "dckron/reduction.hpp"

namespace dckron {

inline constexpr double kMaxPhaseShift = 0.6;

/// Vertex angles as a reference alpha plus per-vertex shifts (radians).
struct AngleProfile {
  Labels labels;
  Eigen::VectorXd shifts;
  double alpha = 0.0;

  Eigen::VectorXd theta() const { return shifts.array() + alpha; }
  /// Angles of `wanted` in that order. Throws DimensionError on a missing
  /// label.
  AngleProfile select(const Labels& wanted) const;
  /// Same profile with every angle moved by c (carried in alpha).
  AngleProfile shifted(double c) const;
};

/// Per-vertex values keyed by label.
struct PowerVector {
  Labels labels;
  Eigen::VectorXd values;

  PowerVector select(const Labels& wanted) const;
};

struct FlowState {
  AngleProfile theta;
  Eigen::VectorXd phi;     // H^T theta, per edge
  Eigen::VectorXd p_edge;  // -B phi
  Eigen::VectorXd p_v;     // vertex extractions, -H_o p_edge = L theta
  PowerVector extraction() const { return {theta.labels, p_v}; }
};

/// Evaluates phi -> P_edge -> P_v for `theta` (matched by label). The
/// reference alpha cancels exactly in phi.
FlowState evaluate_flow(const Network& net, const AngleProfile& theta);

struct ReducedFlow {
  PowerVector p_vred;               // L_red theta_alpha
  PowerVector transferred;          // L_ac P_v(eliminated)
  std::optional<double> residual;   // ||P_v(alpha) + L_ac P_v(elim) - L_red theta_alpha||_inf
};

/// Evaluates the reduced map. When `full` is given, the residual of the
/// reduced power balance is computed from its extractions.
ReducedFlow reduced_flow(const ReductionResult& result, const AngleProfile& theta_alpha,
                         const PowerVector& p_v_eliminated, const FlowState* full = nullptr);

struct UndirectedLine {
  std::string a;
  std::string b;
  double susceptance = 1.0;
};

/// Directs lines from bus roles: toward a sink, away from a source; an
/// interior-interior line points at the endpoint adjacent to a sink.
/// Throws UnorientableLine listing every line the rules cannot decide.
Network orient_edges(std::string name, std::vector<Vertex> buses, const std::vector<UndirectedLine>& lines);

struct BackwardFlow {
  std::string head;
  std::string tail;
  double phi = 0.0;
};

struct ProfileBuild {
  AngleProfile profile;
  std::vector<BackwardFlow> warnings;  // edges with phi < 0
};

/// theta_i = alpha + shift_i; shifts outside [-0.6, 0.6] throw
/// ValidationError.
ProfileBuild build_angle_profile(const Network& net, const Eigen::VectorXd& shifts, double alpha = 0.0);

/// Angle/power vector text: `<label> <value>` per line, `#` comments.
PowerVector parse_vector(std::string_view text);
std::string format_vector(const PowerVector& v);
/// "alpha+0.5271" style rendering of one angle.
std::string format_angle(const AngleProfile& p, std::size_t i);

}  // namespace dckron
