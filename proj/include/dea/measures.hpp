#pragma once

// Efficiency measures over the VRS technology and its extended facet
// technology.

#include "dea/common.hpp"
#include "dea/facets.hpp"
#include "dea/lp.hpp"
#include "dea/technology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace dea {

enum class Model { rm_p, rm_exfa, sbm_exfa, max_sbm, max_rm, m_nonextended };

/// Column label used in reports.
inline const char* label(Model model) {
  switch (model) {
    case Model::rm_p: return "RM(P)";
    case Model::rm_exfa: return "RM";
    case Model::sbm_exfa: return "SBM";
    case Model::max_sbm: return "max SBM";
    case Model::max_rm: return "max RM";
    case Model::m_nonextended: return "M";
  }
  return "?";
}

/// Identifier accepted on the command line.
inline const char* cli_name(Model model) {
  switch (model) {
    case Model::rm_p: return "rm";
    case Model::rm_exfa: return "rm-exfa";
    case Model::sbm_exfa: return "sbm-exfa";
    case Model::max_sbm: return "max-sbm";
    case Model::max_rm: return "max-rm";
    case Model::m_nonextended: return "m-nonextended";
  }
  return "?";
}

inline std::optional<Model> parse_model(std::string_view name) {
  for (Model m : {Model::rm_p, Model::rm_exfa, Model::sbm_exfa, Model::max_sbm, Model::max_rm,
                  Model::m_nonextended})
    if (name == cli_name(m)) return m;
  return std::nullopt;
}

enum class CoordinateKind { input, output };

struct ImprovementItem {
  CoordinateKind kind;
  Index index;
  double old_value;
  double new_value;
};

struct MeasureResult {
  Model model;
  double score = 1.0;
  Eigen::VectorXd theta;  // input factors in [0, 1]
  Eigen::VectorXd phi;    // output factors >= 1
  Point projection;
  Point assessed;
  std::optional<Index> active_facet;
  std::vector<ImprovementItem> improvement_items;
};

enum class Side { input, output };

inline const char* to_string(Side side) { return side == Side::input ? "input" : "output"; }

struct MaxRmResult {
  MeasureResult base;
  Eigen::VectorXd theta_prime;
  Eigen::VectorXd phi_prime;
  double d_minus = 0.0;
  double d_plus = 0.0;
  Side winning_side = Side::output;
};

/// g(theta, phi) = (sum(theta) + sum(1/phi)) / (m+s).
inline double rm_objective(const Eigen::VectorXd& theta, const Eigen::VectorXd& phi) {
  return (theta.sum() + phi.cwiseInverse().sum()) / static_cast<double>(theta.size() + phi.size());
}

/// rho(theta, phi) = mean(theta) / mean(phi).
inline double sbm_ratio(const Eigen::VectorXd& theta, const Eigen::VectorXd& phi) {
  return theta.mean() / phi.mean();
}

/// Coordinates whose relative change exceeds `threshold`.
inline std::vector<ImprovementItem> improvement_items(const Point& from, const Point& to,
                                                      double threshold) {
  std::vector<ImprovementItem> items;
  for (Index i = 0; i < from.inputs(); ++i)
    if (std::abs(to.x[i] - from.x[i]) > threshold * std::abs(from.x[i]))
      items.push_back({CoordinateKind::input, i, from.x[i], to.x[i]});
  for (Index r = 0; r < from.outputs(); ++r)
    if (std::abs(to.y[r] - from.y[r]) > threshold * std::abs(from.y[r]))
      items.push_back({CoordinateKind::output, r, from.y[r], to.y[r]});
  return items;
}

namespace detail {

inline constexpr double kUnitSnap = 1e-9;

inline MeasureResult make_result(Model model, const Point& p, Eigen::VectorXd theta,
                                 Eigen::VectorXd phi, double score, const Tolerances& tol) {
  theta = theta.cwiseMax(0.0).cwiseMin(1.0);
  phi = phi.cwiseMax(1.0);
  const bool unit = (theta.array() >= 1.0 - kUnitSnap).all() && (phi.array() <= 1.0 + kUnitSnap).all();
  if (unit) {
    theta.setOnes();
    phi.setOnes();
    score = 1.0;
  }
  MeasureResult result{model, score, theta, phi, {}, p, std::nullopt, {}};
  result.projection = unit ? p : Point{theta.cwiseProduct(p.x), phi.cwiseProduct(p.y)};
  result.improvement_items = improvement_items(p, result.projection, tol.improvement);
  return result;
}

// Adds rows forcing (theta o x, phi o y) into a technology. theta occupies
// columns [theta, theta+m), phi occupies [phi, phi+s).
using MembershipRows = std::function<void(lp::ProgramBuilder&, Index theta, Index phi)>;

inline MembershipRows vrs_rows(const Dataset& d, const Point& p) {
  return [&d, &p](lp::ProgramBuilder& b, Index theta, Index phi) {
    const Index lambda = b.add_variables(d.size(), 0.0, lp::kInfinity);
    for (Index i = 0; i < d.input_count(); ++i) {
      auto row = input_terms(d, lambda, i);
      row.emplace_back(theta + i, -p.x[i]);
      b.add_row(std::move(row), lp::RowSense::less_equal, 0.0);
    }
    for (Index r = 0; r < d.output_count(); ++r) {
      auto row = output_terms(d, lambda, r);
      row.emplace_back(phi + r, -p.y[r]);
      b.add_row(std::move(row), lp::RowSense::greater_equal, 0.0);
    }
    add_convexity(b, lambda, d.size());
  };
}

inline Terms facet_terms(const Hyperplane& h, const Point& p, Index theta, Index phi) {
  Terms row;
  for (Index i = 0; i < p.inputs(); ++i) row.emplace_back(theta + i, -h.v[i] * p.x[i]);
  for (Index r = 0; r < p.outputs(); ++r) row.emplace_back(phi + r, h.u[r] * p.y[r]);
  return row;
}

inline MembershipRows exfa_rows(const ExtendedTechnology& exfa, const Point& p,
                                std::optional<Index> equal_facet = std::nullopt) {
  return [&exfa, &p, equal_facet](lp::ProgramBuilder& b, Index theta, Index phi) {
    for (Index k = 0; k < exfa.size(); ++k) {
      const Hyperplane& h = exfa.facet(k).hyperplane;
      const auto sense = (equal_facet && *equal_facet == k) ? lp::RowSense::equal : lp::RowSense::less_equal;
      b.add_row(facet_terms(h, p, theta, phi), sense, h.psi);
    }
  };
}

inline constexpr int kMaxCuttingPlaneRounds = 500;
inline constexpr double kCuttingPlaneGap = 1e-10;

// Minimizes g over {theta in [0,1], phi in [1, phi_upper]} intersected with
// the membership rows. Kelley cutting planes on each 1/phi_r term, then an
// LP pass that pushes the point onto the strongly efficient frontier
// without raising g.
inline MeasureResult minimize_rm(Model model, const Point& p, const Eigen::VectorXd& phi_upper,
                                 const MembershipRows& membership, const Tolerances& tol) {
  const Index m = p.inputs();
  const Index s = p.outputs();
  const double weight = 1.0 / static_cast<double>(m + s);

  std::vector<std::vector<double>> cuts(static_cast<std::size_t>(s));
  for (Index r = 0; r < s; ++r) {
    cuts[static_cast<std::size_t>(r)].push_back(1.0);
    if (phi_upper[r] > 1.0) cuts[static_cast<std::size_t>(r)].push_back(phi_upper[r]);
  }

  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_theta = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd best_phi = Eigen::VectorXd::Ones(s);
  for (int round = 0; round < kMaxCuttingPlaneRounds; ++round) {
    lp::ProgramBuilder b;
    const Index theta = b.add_variables(m, 0.0, 1.0, weight);
    const Index phi = b.add_variable(1.0, phi_upper[0]);
    for (Index r = 1; r < s; ++r) b.add_variable(1.0, phi_upper[r]);
    const Index t = b.add_variable(1.0 / phi_upper[0], 1.0, weight);
    for (Index r = 1; r < s; ++r) b.add_variable(1.0 / phi_upper[r], 1.0, weight);
    for (Index r = 0; r < s; ++r)
      for (double at : cuts[static_cast<std::size_t>(r)])
        b.add_row({{t + r, 1.0}, {phi + r, 1.0 / (at * at)}}, lp::RowSense::greater_equal, 2.0 / at);
    membership(b, theta, phi);

    const lp::Solution sol = lp::solve_lp(b.build(), tol);
    if (!sol.optimal()) throw NumericalBreakdown("RM relaxation not solvable");
    const Eigen::VectorXd th = sol.variable_values.segment(theta, m).cwiseMax(0.0).cwiseMin(1.0);
    const Eigen::VectorXd ph = sol.variable_values.segment(phi, s).cwiseMax(1.0);
    const double g = rm_objective(th, ph);
    if (g < best) {
      best = g;
      best_theta = th;
      best_phi = ph;
    }
    if (best - sol.objective_value <= kCuttingPlaneGap) break;

    bool added = false;
    for (Index r = 0; r < s; ++r) {
      if (1.0 / ph[r] - sol.variable_values[t + r] > kCuttingPlaneGap) {
        cuts[static_cast<std::size_t>(r)].push_back(ph[r]);
        added = true;
      }
    }
    if (!added) break;
  }

  // Any dominating point has g no larger, so move to a strongly efficient one.
  lp::ProgramBuilder b;
  b.set_sense(lp::ObjectiveSense::maximize);
  const Index theta = b.add_variables(m, 0.0, 1.0, -1.0);
  const Index phi = b.add_variable(1.0, phi_upper[0], 1.0);
  for (Index r = 1; r < s; ++r) b.add_variable(1.0, phi_upper[r], 1.0);
  for (Index i = 0; i < m; ++i) b.set_bounds(theta + i, 0.0, best_theta[i]);
  for (Index r = 0; r < s; ++r) b.set_bounds(phi + r, best_phi[r], std::max(best_phi[r], phi_upper[r]));
  membership(b, theta, phi);
  const lp::Solution polish = lp::solve_lp(b.build(), tol);
  if (polish.optimal()) {
    const Eigen::VectorXd th = polish.variable_values.segment(theta, m).cwiseMax(0.0).cwiseMin(1.0);
    const Eigen::VectorXd ph = polish.variable_values.segment(phi, s).cwiseMax(1.0);
    if (rm_objective(th, ph) <= best) {
      best = rm_objective(th, ph);
      best_theta = th;
      best_phi = ph;
    }
  }
  return make_result(model, p, best_theta, best_phi, best, tol);
}

inline void require_exfa_member(const ExtendedTechnology& exfa, const Point& p, const Tolerances& tol) {
  if (!exfa_contains(exfa, p, tol)) throw OutsideTechnology();
}

}  // namespace detail

/// Russell measure over P: min g subject to (theta o x, phi o y) in P.
inline MeasureResult rm(const VrsTechnology& tech, const Point& p, const Tolerances& tol = {}) {
  const Dataset& d = tech.dataset();
  detail::check_dimensions(p, d.input_count(), d.output_count());
  if (!contains(tech, p, tol)) throw OutsideTechnology();
  Eigen::VectorXd upper(d.output_count());
  for (Index r = 0; r < d.output_count(); ++r) upper[r] = std::max(1.0, d.outputs.col(r).maxCoeff() / p.y[r]);
  return detail::minimize_rm(Model::rm_p, p, upper, detail::vrs_rows(d, p), tol);
}

inline Eigen::VectorXd phi_prime(const ExtendedTechnology& exfa, const Point& p);

/// Russell measure over P_EXFA.
inline MeasureResult rm(const ExtendedTechnology& exfa, const Point& p, const Tolerances& tol = {}) {
  detail::require_exfa_member(exfa, p, tol);
  const Eigen::VectorXd upper = phi_prime(exfa, p).cwiseMax(1.0);
  MeasureResult result = detail::minimize_rm(Model::rm_exfa, p, upper, detail::exfa_rows(exfa, p), tol);
  if (const auto active = active_facets(exfa, result.projection, tol); !active.empty())
    result.active_facet = active.front();
  return result;
}

/// SBM over P_EXFA: min mean(theta)/mean(phi). Among optimal points the one
/// with the largest sum(phi) - sum(theta) is reported.
inline MeasureResult sbm_exfa(const ExtendedTechnology& exfa, const Point& p, const Tolerances& tol = {}) {
  detail::require_exfa_member(exfa, p, tol);
  const Index m = p.inputs();
  const Index s = p.outputs();

  lp::ProgramBuilder b;
  const Index theta = b.add_variables(m, 0.0, 1.0);
  const Index phi = b.add_variables(s, 1.0, lp::kInfinity);
  detail::exfa_rows(exfa, p)(b, theta, phi);

  lp::AffineForm numerator{Eigen::VectorXd::Zero(m + s), 0.0};
  numerator.coefficients.head(m).setConstant(1.0 / static_cast<double>(m));
  lp::AffineForm denominator{Eigen::VectorXd::Zero(m + s), 0.0};
  denominator.coefficients.tail(s).setConstant(1.0 / static_cast<double>(s));
  const lp::Solution first =
      lp::solve_linear_fractional(numerator, denominator, b.constraints(), lp::ObjectiveSense::minimize, tol);
  if (!first.optimal()) throw NumericalBreakdown("SBM fractional program not solvable");
  const double rho = first.objective_value;

  detail::Terms level;
  for (Index i = 0; i < m; ++i) level.emplace_back(theta + i, 1.0 / static_cast<double>(m));
  for (Index r = 0; r < s; ++r) level.emplace_back(phi + r, -rho / static_cast<double>(s));
  b.add_row(std::move(level), lp::RowSense::less_equal, 0.0);
  b.set_sense(lp::ObjectiveSense::maximize);
  for (Index i = 0; i < m; ++i) b.set_cost(theta + i, -1.0);
  for (Index r = 0; r < s; ++r) b.set_cost(phi + r, 1.0);
  const lp::Solution second = lp::solve_lp(b.build(), tol);

  const Eigen::VectorXd& z = second.optimal() ? second.variable_values : first.variable_values;
  const Eigen::VectorXd th = z.head(m).cwiseMax(0.0).cwiseMin(1.0);
  const Eigen::VectorXd ph = z.segment(m, s).cwiseMax(1.0);
  MeasureResult result =
      detail::make_result(Model::sbm_exfa, p, th, ph, std::max(0.0, sbm_ratio(th, ph)), tol);
  if (const auto active = active_facets(exfa, result.projection, tol); !active.empty())
    result.active_facet = active.front();
  return result;
}

/// Max SBM: the largest rho over projections lying on some facet. One
/// fractional program per facet; ties go to the lowest facet index.
inline MeasureResult max_sbm(const ExtendedTechnology& exfa, const Point& p, const Tolerances& tol = {}) {
  detail::require_exfa_member(exfa, p, tol);
  const Index m = p.inputs();
  const Index s = p.outputs();
  lp::AffineForm numerator{Eigen::VectorXd::Zero(m + s), 0.0};
  numerator.coefficients.head(m).setConstant(1.0 / static_cast<double>(m));
  lp::AffineForm denominator{Eigen::VectorXd::Zero(m + s), 0.0};
  denominator.coefficients.tail(s).setConstant(1.0 / static_cast<double>(s));

  std::optional<Index> best_facet;
  double best = -1.0;
  Eigen::VectorXd best_z;
  for (Index k = 0; k < exfa.size(); ++k) {
    lp::ProgramBuilder b;
    const Index theta = b.add_variables(m, 0.0, 1.0);
    const Index phi = b.add_variables(s, 1.0, lp::kInfinity);
    detail::exfa_rows(exfa, p, k)(b, theta, phi);
    const lp::Solution sol =
        lp::solve_linear_fractional(numerator, denominator, b.constraints(), lp::ObjectiveSense::maximize, tol);
    if (!sol.optimal()) continue;
    if (sol.objective_value > best + tol.optimality) {
      best = sol.objective_value;
      best_facet = k;
      best_z = sol.variable_values;
    }
  }
  if (!best_facet) throw NumericalBreakdown("no facet reachable for max SBM");
  MeasureResult result =
      detail::make_result(Model::max_sbm, p, best_z.head(m), best_z.segment(m, s), best, tol);
  result.active_facet = best_facet;
  return result;
}

/// Smallest factor theta such that shrinking input i alone by theta stays in
/// P_EXFA, in closed form. One entry per input.
inline Eigen::VectorXd theta_prime(const ExtendedTechnology& exfa, const Point& p) {
  Eigen::VectorXd out(p.inputs());
  for (Index i = 0; i < p.inputs(); ++i) {
    double ratio = std::numeric_limits<double>::infinity();
    for (const Facet& f : exfa.facets())
      ratio = std::min(ratio, f.hyperplane.slack(p) / (f.hyperplane.v[i] * p.x[i]));
    out[i] = std::max(0.0, 1.0 - ratio);
  }
  return out;
}

/// Largest factor phi such that expanding output r alone by phi stays in
/// P_EXFA, in closed form.
inline Eigen::VectorXd phi_prime(const ExtendedTechnology& exfa, const Point& p) {
  Eigen::VectorXd out(p.outputs());
  for (Index r = 0; r < p.outputs(); ++r) {
    double ratio = std::numeric_limits<double>::infinity();
    for (const Facet& f : exfa.facets())
      ratio = std::min(ratio, f.hyperplane.slack(p) / (f.hyperplane.u[r] * p.y[r]));
    out[r] = 1.0 + ratio;
  }
  return out;
}

/// LP counterpart of theta_prime for input i.
inline double theta_prime_lp(const ExtendedTechnology& exfa, const Point& p, Index i,
                             const Tolerances& tol = {}) {
  lp::ProgramBuilder b;
  const Index theta = b.add_variable(0.0, 1.0, 1.0);
  for (const Facet& f : exfa.facets()) {
    const Hyperplane& h = f.hyperplane;
    b.add_row({{theta, -h.v[i] * p.x[i]}}, lp::RowSense::less_equal, h.slack(p) - h.v[i] * p.x[i]);
  }
  const lp::Solution sol = lp::solve_lp(b.build(), tol);
  if (!sol.optimal()) throw OutsideTechnology();
  return sol.objective_value;
}

/// LP counterpart of phi_prime for output r.
inline double phi_prime_lp(const ExtendedTechnology& exfa, const Point& p, Index r,
                           const Tolerances& tol = {}) {
  lp::ProgramBuilder b;
  b.set_sense(lp::ObjectiveSense::maximize);
  const Index phi = b.add_variable(1.0, lp::kInfinity, 1.0);
  for (const Facet& f : exfa.facets()) {
    const Hyperplane& h = f.hyperplane;
    b.add_row({{phi, h.u[r] * p.y[r]}}, lp::RowSense::less_equal, h.slack(p) + h.u[r] * p.y[r]);
  }
  const lp::Solution sol = lp::solve_lp(b.build(), tol);
  if (!sol.optimal()) throw OutsideTechnology();
  return sol.objective_value;
}

/// Least single-input contraction reaching the boundary: 1 - max theta'.
inline double d_minus(const ExtendedTechnology& exfa, const Point& p) {
  return 1.0 - theta_prime(exfa, p).maxCoeff();
}

/// Least single-output expansion reaching the boundary: min phi' - 1.
inline double d_plus(const ExtendedTechnology& exfa, const Point& p) {
  return phi_prime(exfa, p).minCoeff() - 1.0;
}

/// Max RM G over P_EXFA. The projection moves exactly one coordinate; when
/// both sides score equally the output side is chosen.
inline MaxRmResult max_rm(const ExtendedTechnology& exfa, const Point& p, const Tolerances& tol = {}) {
  detail::require_exfa_member(exfa, p, tol);
  const Index m = p.inputs();
  const Index s = p.outputs();
  const auto dim = static_cast<double>(m + s);

  MaxRmResult out;
  out.theta_prime = theta_prime(exfa, p);
  out.phi_prime = phi_prime(exfa, p);
  out.d_minus = std::clamp(1.0 - out.theta_prime.maxCoeff(), 0.0, 1.0);
  out.d_plus = std::max(0.0, out.phi_prime.minCoeff() - 1.0);

  const double input_side = (dim - out.d_minus) / dim;
  const double output_side = (dim - out.d_plus / (1.0 + out.d_plus)) / dim;
  out.winning_side = input_side > output_side ? Side::input : Side::output;
  const double score = std::max(input_side, output_side);

  Eigen::VectorXd theta = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd phi = Eigen::VectorXd::Ones(s);
  if (out.winning_side == Side::input) {
    Index pick = -1;
    for (Index i = 0; i < m; ++i)
      if (out.theta_prime[i] > 0.0 && (pick < 0 || out.theta_prime[i] > out.theta_prime[pick])) pick = i;
    if (pick >= 0) theta[pick] = out.theta_prime[pick];
  } else {
    Index pick = 0;
    for (Index r = 1; r < s; ++r)
      if (out.phi_prime[r] < out.phi_prime[pick]) pick = r;
    phi[pick] = out.phi_prime[pick];
  }
  out.base = detail::make_result(Model::max_rm, p, theta, phi, score, tol);
  if (out.base.score >= 1.0) out.base.score = 1.0;
  if (const auto active = active_facets(exfa, out.base.projection, tol); !active.empty())
    out.base.active_facet = active.front();
  return out;
}

/// Largest face size (inputs + outputs + members) handled by vertex enumeration.
inline constexpr Index kMaxVertexEnumerationSize = 12;

/// M: the largest g over strongly efficient points of P that dominate p.
/// `faces` are the member sets from enumerate_efficient_faces.
inline MeasureResult max_rm_nonextended(const VrsTechnology& tech, const Point& p,
                                        const std::vector<std::vector<Index>>& faces,
                                        const Tolerances& tol = {}) {
  const Dataset& d = tech.dataset();
  const Index m = d.input_count();
  const Index s = d.output_count();
  detail::check_dimensions(p, m, s);
  if (!contains(tech, p, tol)) throw OutsideTechnology();

  double best = -1.0;
  Eigen::VectorXd best_theta, best_phi;
  for (const auto& face : faces) {
    const auto q = static_cast<Index>(face.size());
    if (m + s + q > kMaxVertexEnumerationSize) throw InstanceTooLarge();

    // Inequalities in lambda-space as rows a'lambda <= b: -lambda_j <= 0,
    // sum lambda x_j <= x, -sum lambda y_j <= -y.
    const Index count = q + m + s;
    Eigen::MatrixXd ineq = Eigen::MatrixXd::Zero(count, q);
    Eigen::VectorXd bound = Eigen::VectorXd::Zero(count);
    for (Index j = 0; j < q; ++j) ineq(j, j) = -1.0;
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < q; ++j) ineq(q + i, j) = d.inputs(face[static_cast<std::size_t>(j)], i);
      bound[q + i] = p.x[i];
    }
    for (Index r = 0; r < s; ++r) {
      for (Index j = 0; j < q; ++j) ineq(q + m + r, j) = -d.outputs(face[static_cast<std::size_t>(j)], r);
      bound[q + m + r] = -p.y[r];
    }

    std::vector<Index> pick(static_cast<std::size_t>(q - 1));
    for (Index k = 0; k < q - 1; ++k) pick[static_cast<std::size_t>(k)] = k;
    do {
      Eigen::MatrixXd system(q, q);
      Eigen::VectorXd rhs(q);
      system.row(0).setOnes();
      rhs[0] = 1.0;
      for (Index k = 0; k < q - 1; ++k) {
        system.row(k + 1) = ineq.row(pick[static_cast<std::size_t>(k)]);
        rhs[k + 1] = bound[pick[static_cast<std::size_t>(k)]];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
      lu.setThreshold(tol.rank);
      if (lu.rank() < q) continue;
      const Eigen::VectorXd lambda = lu.solve(rhs);
      const Eigen::VectorXd excess = ineq * lambda - bound;
      bool feasible = true;
      for (Index k = 0; k < count; ++k) {
        const double scale = k < q ? 1.0 : std::max(1.0, std::abs(bound[k]));
        if (excess[k] > tol.feasibility * scale) feasible = false;
      }
      if (!feasible) continue;

      Eigen::VectorXd theta(m), phi(s);
      for (Index i = 0; i < m; ++i) {
        double v = 0.0;
        for (Index j = 0; j < q; ++j) v += lambda[j] * d.inputs(face[static_cast<std::size_t>(j)], i);
        theta[i] = std::clamp(v / p.x[i], 0.0, 1.0);
      }
      for (Index r = 0; r < s; ++r) {
        double v = 0.0;
        for (Index j = 0; j < q; ++j) v += lambda[j] * d.outputs(face[static_cast<std::size_t>(j)], r);
        phi[r] = std::max(1.0, v / p.y[r]);
      }
      const double g = rm_objective(theta, phi);
      if (g > best + 1e-12) {
        best = g;
        best_theta = theta;
        best_phi = phi;
      }
    } while (q > 1 && detail::next_combination(pick, count));
  }
  if (best < 0.0) throw NumericalBreakdown("no efficient point dominates the assessed DMU");
  return detail::make_result(Model::m_nonextended, p, best_theta, best_phi, best, tol);
}

inline MeasureResult max_rm_nonextended(const VrsTechnology& tech, const Point& p,
                                        const Tolerances& tol = {}) {
  return max_rm_nonextended(tech, p, enumerate_efficient_faces(tech, tol), tol);
}

}  // namespace dea
