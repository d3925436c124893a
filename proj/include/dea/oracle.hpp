#pragma once

// Brute-force reference computations used to cross-check the measures.
// Slow by design; they rely only on a membership predicate.

#include "dea/facets.hpp"
#include "dea/lp.hpp"
#include "dea/measures.hpp"
#include "dea/technology.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace dea::oracle {

using Membership = std::function<bool(const Point&)>;

struct GridAxis {
  double lower;
  double upper;
  double step;
};

/// Axes for theta_1..theta_m followed by phi_1..phi_s.
struct GridSpec {
  std::vector<GridAxis> axes;
  int refinements = 2;
  double shrink = 10.0;
};

/// theta axes over [0, 1] and phi axes over [1, phi_upper_r], all with `step`.
inline GridSpec uniform_grid(const Eigen::VectorXd& phi_upper, Index inputs, double step) {
  GridSpec spec;
  for (Index i = 0; i < inputs; ++i) spec.axes.push_back({0.0, 1.0, step});
  for (Index r = 0; r < phi_upper.size(); ++r) spec.axes.push_back({1.0, std::max(1.0, phi_upper[r]), step});
  return spec;
}

struct GridResult {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd theta;
  Eigen::VectorXd phi;
};

namespace detail {

inline std::vector<double> axis_values(const GridAxis& a) {
  std::vector<double> values;
  const auto count = static_cast<long>(std::floor((a.upper - a.lower) / a.step + 1e-9));
  for (long k = 0; k <= count; ++k) values.push_back(a.lower + static_cast<double>(k) * a.step);
  if (values.empty() || a.upper - values.back() > 1e-12) values.push_back(a.upper);
  return values;
}

inline void scan(const std::vector<GridAxis>& axes, const Point& p, const Membership& member,
                 GridResult& best) {
  const Index m = p.inputs();
  const Index s = p.outputs();
  std::vector<std::vector<double>> values;
  for (const auto& a : axes) values.push_back(axis_values(a));
  std::vector<std::size_t> at(axes.size(), 0);
  Eigen::VectorXd theta(m), phi(s);
  while (true) {
    for (Index i = 0; i < m; ++i) theta[i] = values[static_cast<std::size_t>(i)][at[static_cast<std::size_t>(i)]];
    for (Index r = 0; r < s; ++r)
      phi[r] = values[static_cast<std::size_t>(m + r)][at[static_cast<std::size_t>(m + r)]];
    const double g = rm_objective(theta, phi);
    if (g < best.value && member(Point{theta.cwiseProduct(p.x), phi.cwiseProduct(p.y)})) {
      best.value = g;
      best.theta = theta;
      best.phi = phi;
    }
    std::size_t k = 0;
    while (k < at.size() && ++at[k] == values[k].size()) at[k++] = 0;
    if (k == at.size()) break;
  }
}

}  // namespace detail

/// Grid minimum of g over feasible (theta, phi), refined around the
/// incumbent: each pass shrinks the step by spec.shrink within a window of
/// one previous step on each side.
inline GridResult grid_min_g(const Membership& member, const Point& p, const GridSpec& spec) {
  GridResult best;
  std::vector<GridAxis> axes = spec.axes;
  detail::scan(axes, p, member, best);
  for (int pass = 0; pass < spec.refinements && std::isfinite(best.value); ++pass) {
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const double centre = k < static_cast<std::size_t>(p.inputs())
                                ? best.theta[static_cast<Index>(k)]
                                : best.phi[static_cast<Index>(k) - p.inputs()];
      const GridAxis& bounds = spec.axes[k];
      const double step = axes[k].step;
      axes[k] = {std::max(bounds.lower, centre - step), std::min(bounds.upper, centre + step), step / spec.shrink};
    }
    detail::scan(axes, p, member, best);
  }
  return best;
}

inline constexpr double kBisectionTolerance = 1e-10;

/// Boundary factor along a single-coordinate ray: the smallest theta for an
/// input (x_i scaled by theta) or the largest phi for an output (y_r scaled
/// by phi) that keeps the point a member.
inline double line_search_extreme(const Membership& member, const Point& p, CoordinateKind kind, Index index) {
  const auto at = [&](double factor) {
    Point q = p;
    if (kind == CoordinateKind::input)
      q.x[index] *= factor;
    else
      q.y[index] *= factor;
    return member(q);
  };
  if (kind == CoordinateKind::input) {
    if (at(0.0)) return 0.0;
    double infeasible = 0.0, feasible = 1.0;
    while (feasible - infeasible > kBisectionTolerance) {
      const double mid = 0.5 * (infeasible + feasible);
      (at(mid) ? feasible : infeasible) = mid;
    }
    return feasible;
  }
  double feasible = 1.0, infeasible = 2.0;
  while (at(infeasible)) {
    feasible = infeasible;
    infeasible *= 2.0;
    if (infeasible > 1e12) return std::numeric_limits<double>::infinity();
  }
  while (infeasible - feasible > kBisectionTolerance) {
    const double mid = 0.5 * (infeasible + feasible);
    (at(mid) ? feasible : infeasible) = mid;
  }
  return feasible;
}

/// True when some (0, y) with y >= 0 and y != 0 lies in P_EXFA: the LP
/// max sum(y) over {(0, y) in P_EXFA, y >= 0, sum(y) <= 1} has a positive
/// optimum.
inline bool free_lunch_lp_oracle(const ExtendedTechnology& exfa, const Tolerances& tol = {}) {
  lp::ProgramBuilder b;
  b.set_sense(lp::ObjectiveSense::maximize);
  const Index y = b.add_variables(exfa.outputs(), 0.0, lp::kInfinity, 1.0);
  for (const Facet& f : exfa.facets()) {
    dea::detail::Terms row;
    for (Index r = 0; r < exfa.outputs(); ++r) row.emplace_back(y + r, f.hyperplane.u[r]);
    b.add_row(std::move(row), lp::RowSense::less_equal, f.hyperplane.psi);
  }
  dea::detail::Terms total;
  for (Index r = 0; r < exfa.outputs(); ++r) total.emplace_back(y + r, 1.0);
  b.add_row(std::move(total), lp::RowSense::less_equal, 1.0);
  const lp::Solution sol = lp::solve_lp(b.build(), tol);
  return sol.optimal() && sol.objective_value > 1e-12;
}

}  // namespace dea::oracle
