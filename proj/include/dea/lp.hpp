#pragma once

// Dense two-phase primal simplex (Bland's rule) and a Charnes-Cooper wrapper
// for linear-fractional objectives. Sized for desk-scale problems: the whole
// tableau is kept in memory and the basis is refactorized periodically.

#include "dea/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace dea::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class ObjectiveSense { minimize, maximize };
enum class RowSense { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

/// Rows `matrix * z (sense) rhs` plus box bounds `lower <= z <= upper`.
struct ConstraintSystem {
  Eigen::MatrixXd matrix;
  std::vector<RowSense> senses;
  Eigen::VectorXd rhs;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Index rows() const { return matrix.rows(); }
  Index cols() const { return matrix.cols(); }

  void validate() const {
    if (static_cast<Index>(senses.size()) != matrix.rows() || rhs.size() != matrix.rows())
      throw std::invalid_argument("constraint rows, senses and right-hand sides disagree");
    if (lower.size() != matrix.cols() || upper.size() != matrix.cols())
      throw std::invalid_argument("bound vectors do not match the variable count");
    for (Index j = 0; j < lower.size(); ++j) {
      if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j])
        throw std::invalid_argument("variable lower bound exceeds upper bound");
      if (lower[j] == kInfinity || upper[j] == -kInfinity)
        throw std::invalid_argument("variable bound is infinite on the wrong side");
    }
  }
};

struct LinearProgram {
  Eigen::VectorXd objective;
  ObjectiveSense sense = ObjectiveSense::minimize;
  ConstraintSystem constraints;
};

struct Solution {
  Status status = Status::infeasible;
  double objective_value = 0.0;
  Eigen::VectorXd variable_values;
  std::vector<Index> active_row_indices;

  bool optimal() const { return status == Status::optimal; }
};

/// Incremental construction of a LinearProgram from sparse rows.
class ProgramBuilder {
public:
  Index add_variable(double lower, double upper, double cost = 0.0) {
    lower_.push_back(lower);
    upper_.push_back(upper);
    cost_.push_back(cost);
    return static_cast<Index>(cost_.size()) - 1;
  }

  Index add_variables(Index count, double lower, double upper, double cost = 0.0) {
    const Index first = variable_count();
    for (Index k = 0; k < count; ++k) add_variable(lower, upper, cost);
    return first;
  }

  void set_cost(Index var, double cost) { cost_.at(static_cast<std::size_t>(var)) = cost; }

  void set_bounds(Index var, double lower, double upper) {
    lower_.at(static_cast<std::size_t>(var)) = lower;
    upper_.at(static_cast<std::size_t>(var)) = upper;
  }

  Index add_row(std::vector<std::pair<Index, double>> terms, RowSense sense, double rhs) {
    rows_.push_back({std::move(terms), sense, rhs});
    return static_cast<Index>(rows_.size()) - 1;
  }

  void set_sense(ObjectiveSense sense) { sense_ = sense; }

  Index variable_count() const { return static_cast<Index>(cost_.size()); }
  Index row_count() const { return static_cast<Index>(rows_.size()); }

  ConstraintSystem constraints() const {
    const Index n = variable_count();
    const Index m = row_count();
    ConstraintSystem cs;
    cs.matrix = Eigen::MatrixXd::Zero(m, n);
    cs.rhs.resize(m);
    cs.senses.reserve(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) {
      const auto& row = rows_[static_cast<std::size_t>(i)];
      for (const auto& [var, coef] : row.terms) cs.matrix(i, var) += coef;
      cs.senses.push_back(row.sense);
      cs.rhs[i] = row.rhs;
    }
    cs.lower = Eigen::Map<const Eigen::VectorXd>(lower_.data(), n);
    cs.upper = Eigen::Map<const Eigen::VectorXd>(upper_.data(), n);
    return cs;
  }

  LinearProgram build() const {
    LinearProgram lp;
    lp.objective = Eigen::Map<const Eigen::VectorXd>(cost_.data(), variable_count());
    lp.sense = sense_;
    lp.constraints = constraints();
    return lp;
  }

private:
  struct Row {
    std::vector<std::pair<Index, double>> terms;
    RowSense sense;
    double rhs;
  };
  std::vector<double> lower_, upper_, cost_;
  std::vector<Row> rows_;
  ObjectiveSense sense_ = ObjectiveSense::minimize;
};

/// Rows whose absolute slack at `z` is within `tolerance` (equality rows always).
inline std::vector<Index> active_rows(const ConstraintSystem& cs, const Eigen::VectorXd& z,
                                      double tolerance) {
  std::vector<Index> active;
  if (cs.rows() == 0) return active;
  const Eigen::VectorXd activity = cs.matrix * z;
  for (Index i = 0; i < cs.rows(); ++i) {
    if (std::abs(cs.rhs[i] - activity[i]) <= tolerance) active.push_back(i);
  }
  return active;
}

namespace detail {

// Standard form: min c'w  s.t.  A w = b, w >= 0, b >= 0. Column layout is
// [structural | slack | artificial].
struct StandardForm {
  struct Column {
    Index original;
    double sign;
  };

  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd cost;
  std::vector<Column> structural;
  Eigen::VectorXd offset;
  Index first_artificial = 0;
  std::vector<Index> initial_basis;

  Index cols() const { return a.cols(); }
  Index rows() const { return a.rows(); }
};

inline StandardForm standardize(const LinearProgram& lp) {
  const ConstraintSystem& cs = lp.constraints;
  const Index n = cs.cols();
  StandardForm sf;
  sf.offset = Eigen::VectorXd::Zero(n);

  struct BoundRow {
    Index column;
    double rhs;
  };
  std::vector<BoundRow> bound_rows;
  for (Index j = 0; j < n; ++j) {
    const double lo = cs.lower[j];
    const double hi = cs.upper[j];
    if (std::isfinite(lo)) {
      sf.offset[j] = lo;
      sf.structural.push_back({j, 1.0});
      if (std::isfinite(hi))
        bound_rows.push_back({static_cast<Index>(sf.structural.size()) - 1, hi - lo});
    } else if (std::isfinite(hi)) {
      sf.offset[j] = hi;
      sf.structural.push_back({j, -1.0});
    } else {
      sf.structural.push_back({j, 1.0});
      sf.structural.push_back({j, -1.0});
    }
  }

  const Index ns = static_cast<Index>(sf.structural.size());
  const Index m = cs.rows() + static_cast<Index>(bound_rows.size());

  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(m, ns);
  Eigen::VectorXd rhs(m);
  std::vector<RowSense> senses(static_cast<std::size_t>(m));
  const Eigen::VectorXd shift = cs.rows() > 0 ? Eigen::VectorXd(cs.matrix * sf.offset)
                                              : Eigen::VectorXd::Zero(0);
  for (Index i = 0; i < cs.rows(); ++i) {
    for (Index k = 0; k < ns; ++k) {
      const auto& col = sf.structural[static_cast<std::size_t>(k)];
      rows(i, k) = cs.matrix(i, col.original) * col.sign;
    }
    rhs[i] = cs.rhs[i] - shift[i];
    senses[static_cast<std::size_t>(i)] = cs.senses[static_cast<std::size_t>(i)];
  }
  for (std::size_t r = 0; r < bound_rows.size(); ++r) {
    const Index i = cs.rows() + static_cast<Index>(r);
    rows(i, bound_rows[r].column) = 1.0;
    rhs[i] = bound_rows[r].rhs;
    senses[static_cast<std::size_t>(i)] = RowSense::less_equal;
  }

  Index slack_count = 0;
  for (const RowSense s : senses) slack_count += (s != RowSense::equal) ? 1 : 0;

  // Decide which rows need an artificial column.
  std::vector<double> slack_sign(static_cast<std::size_t>(m), 0.0);
  std::vector<bool> flip(static_cast<std::size_t>(m), false);
  Index artificial_count = 0;
  for (Index i = 0; i < m; ++i) {
    const auto u = static_cast<std::size_t>(i);
    slack_sign[u] = senses[u] == RowSense::less_equal      ? 1.0
                    : senses[u] == RowSense::greater_equal ? -1.0
                                                           : 0.0;
    flip[u] = rhs[i] < 0.0;
    const double effective = flip[u] ? -slack_sign[u] : slack_sign[u];
    if (effective <= 0.0) ++artificial_count;
  }

  const Index total = ns + slack_count + artificial_count;
  sf.a = Eigen::MatrixXd::Zero(m, total);
  sf.b.resize(m);
  sf.a.leftCols(ns) = rows;
  sf.first_artificial = ns + slack_count;
  sf.initial_basis.resize(static_cast<std::size_t>(m));

  Index next_slack = ns;
  Index next_artificial = sf.first_artificial;
  for (Index i = 0; i < m; ++i) {
    const auto u = static_cast<std::size_t>(i);
    Index slack_col = -1;
    if (slack_sign[u] != 0.0) {
      slack_col = next_slack++;
      sf.a(i, slack_col) = slack_sign[u];
    }
    sf.b[i] = rhs[i];
    if (flip[u]) {
      sf.a.row(i) *= -1.0;
      sf.b[i] = -sf.b[i];
    }
    if (slack_col >= 0 && sf.a(i, slack_col) > 0.0) {
      sf.initial_basis[u] = slack_col;
    } else {
      sf.a(i, next_artificial) = 1.0;
      sf.initial_basis[u] = next_artificial++;
    }
  }

  sf.cost = Eigen::VectorXd::Zero(total);
  const double direction = lp.sense == ObjectiveSense::maximize ? -1.0 : 1.0;
  for (Index k = 0; k < ns; ++k) {
    const auto& col = sf.structural[static_cast<std::size_t>(k)];
    sf.cost[k] = direction * lp.objective[col.original] * col.sign;
  }
  return sf;
}

class Simplex {
public:
  Simplex(const StandardForm& sf, const Tolerances& tol)
      : sf_(sf), tol_(tol), basis_(sf.initial_basis) {
    rows_.resize(static_cast<std::size_t>(sf.rows()));
    for (Index i = 0; i < sf.rows(); ++i) rows_[static_cast<std::size_t>(i)] = i;
    enterable_.assign(static_cast<std::size_t>(sf.cols()), true);
    refactor();
  }

  Status run() {
    if (sf_.first_artificial < sf_.cols()) {
      Eigen::VectorXd phase_one = Eigen::VectorXd::Zero(sf_.cols());
      phase_one.tail(sf_.cols() - sf_.first_artificial).setOnes();
      iterate(phase_one);
      refactor();
      double infeasibility = 0.0;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] >= sf_.first_artificial)
          infeasibility += std::max(0.0, rhs(static_cast<Index>(i)));
      }
      if (infeasibility > tol_.feasibility) return Status::infeasible;
      drive_out_artificials();
      for (Index j = sf_.first_artificial; j < sf_.cols(); ++j)
        enterable_[static_cast<std::size_t>(j)] = false;
    }
    const bool bounded = iterate(sf_.cost);
    refactor();
    return bounded ? Status::optimal : Status::unbounded;
  }

  Eigen::VectorXd primal() const {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(sf_.cols());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      w[basis_[i]] = std::max(0.0, rhs(static_cast<Index>(i)));
    return w;
  }

private:
  static constexpr Index kRefactorInterval = 50;
  static constexpr Index kIterationLimit = 50000;

  double rhs(Index i) const { return tableau_(i, tableau_.cols() - 1); }

  void refactor() {
    const Index m = static_cast<Index>(rows_.size());
    if (m == 0) {
      tableau_.resize(0, sf_.cols() + 1);
      since_refactor_ = 0;
      return;
    }
    Eigen::MatrixXd basis_matrix(m, m);
    Eigen::MatrixXd rhs_block(m, sf_.cols() + 1);
    for (Index r = 0; r < m; ++r) {
      const Index src = rows_[static_cast<std::size_t>(r)];
      for (Index c = 0; c < m; ++c) basis_matrix(r, c) = sf_.a(src, basis_[static_cast<std::size_t>(c)]);
      rhs_block.row(r).head(sf_.cols()) = sf_.a.row(src);
      rhs_block(r, sf_.cols()) = sf_.b[src];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    const double scale = std::max(1.0, basis_matrix.cwiseAbs().maxCoeff());
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() < tol_.pivot * scale)
      throw NumericalBreakdown("singular basis after refactorization");
    tableau_ = lu.solve(rhs_block);
    since_refactor_ = 0;
  }

  void pivot(Index row, Index col) {
    const double p = tableau_(row, col);
    tableau_.row(row) /= p;
    for (Index i = 0; i < tableau_.rows(); ++i) {
      if (i == row) continue;
      const double factor = tableau_(i, col);
      if (factor != 0.0) tableau_.row(i) -= factor * tableau_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
    if (++since_refactor_ >= kRefactorInterval) refactor();
  }

  // Returns false when the objective is unbounded below.
  bool iterate(const Eigen::VectorXd& cost) {
    const Index m = tableau_.rows();
    const Index n = sf_.cols();
    for (Index iteration = 0; iteration < kIterationLimit; ++iteration) {
      Eigen::VectorXd basic_cost(m);
      for (Index i = 0; i < m; ++i) basic_cost[i] = cost[basis_[static_cast<std::size_t>(i)]];

      // Bland: lowest-index improving column.
      Index entering = -1;
      for (Index j = 0; j < n; ++j) {
        if (!enterable_[static_cast<std::size_t>(j)]) continue;
        const double reduced = cost[j] - (m > 0 ? basic_cost.dot(tableau_.col(j)) : 0.0);
        if (reduced < -tol_.optimality) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      // Bland: among minimum ratios, the lowest basic variable index leaves.
      Index leaving = -1;
      double best = kInfinity;
      for (Index i = 0; i < m; ++i) {
        const double coef = tableau_(i, entering);
        if (coef <= tol_.ratio_pivot) continue;
        const double ratio = std::max(0.0, rhs(i)) / coef;
        const double slack = 1e-12 * (1.0 + std::abs(best));
        if (leaving < 0 || ratio < best - slack) {
          best = ratio;
          leaving = i;
        } else if (ratio <= best + slack &&
                   basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)]) {
          leaving = i;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
    throw NumericalBreakdown("iteration limit reached");
  }

  void drive_out_artificials() {
    for (Index i = 0; i < tableau_.rows();) {
      if (basis_[static_cast<std::size_t>(i)] < sf_.first_artificial) {
        ++i;
        continue;
      }
      Index best = -1;
      double magnitude = tol_.ratio_pivot;
      for (Index j = 0; j < sf_.first_artificial; ++j) {
        const double value = std::abs(tableau_(i, j));
        if (value > magnitude) {
          magnitude = value;
          best = j;
        }
      }
      if (best >= 0) {
        pivot(i, best);
        ++i;
      } else {
        // Redundant row: drop it together with its artificial.
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        refactor();
      }
    }
  }

  const StandardForm& sf_;
  Tolerances tol_;
  std::vector<Index> basis_;
  std::vector<Index> rows_;
  std::vector<bool> enterable_;
  Eigen::MatrixXd tableau_;
  Index since_refactor_ = 0;
};

}  // namespace detail

/// Solves `problem` to optimality or reports infeasibility/unboundedness.
///
/// Throws NumericalBreakdown when a refactorized basis is singular or the
/// iteration limit is hit. Identical input gives bitwise-identical output.
inline Solution solve_lp(const LinearProgram& problem, const Tolerances& tol = {}) {
  problem.constraints.validate();
  if (problem.objective.size() != problem.constraints.cols())
    throw std::invalid_argument("objective length does not match the variable count");

  const detail::StandardForm sf = detail::standardize(problem);
  detail::Simplex simplex(sf, tol);

  Solution solution;
  solution.status = simplex.run();
  if (solution.status != Status::optimal) return solution;

  const Eigen::VectorXd w = simplex.primal();
  Eigen::VectorXd z = sf.offset;
  for (std::size_t k = 0; k < sf.structural.size(); ++k)
    z[sf.structural[k].original] += sf.structural[k].sign * w[static_cast<Index>(k)];

  solution.variable_values = z;
  solution.objective_value = problem.objective.dot(z);
  solution.active_row_indices = active_rows(problem.constraints, z, tol.feasibility);
  return solution;
}

/// `coefficients' z + constant`.
struct AffineForm {
  Eigen::VectorXd coefficients;
  double constant = 0.0;

  double operator()(const Eigen::VectorXd& z) const { return coefficients.dot(z) + constant; }
};

inline constexpr double kMinimumScaling = 1e-12;

/// Relative violation allowed when mapping a homogenized optimum back to the
/// original variables. A larger gap means the scale variable collapsed onto
/// its floor and the original system has no solution.
inline constexpr double kRecoveryTolerance = 1e-7;

/// Largest violation of rows and bounds at z, each scaled by 1 + |bound|.
inline double max_relative_violation(const ConstraintSystem& cs, const Eigen::VectorXd& z) {
  double worst = 0.0;
  const Eigen::VectorXd activity = cs.matrix * z;
  for (Index i = 0; i < cs.rows(); ++i) {
    const double gap = activity[i] - cs.rhs[i];
    double v = 0.0;
    switch (cs.senses[static_cast<std::size_t>(i)]) {
      case RowSense::less_equal: v = gap; break;
      case RowSense::greater_equal: v = -gap; break;
      case RowSense::equal: v = std::abs(gap); break;
    }
    worst = std::max(worst, v / (1.0 + std::abs(cs.rhs[i])));
  }
  for (Index j = 0; j < z.size(); ++j) {
    if (std::isfinite(cs.lower[j])) worst = std::max(worst, (cs.lower[j] - z[j]) / (1.0 + std::abs(cs.lower[j])));
    if (std::isfinite(cs.upper[j])) worst = std::max(worst, (z[j] - cs.upper[j]) / (1.0 + std::abs(cs.upper[j])));
  }
  return worst;
}

/// Optimizes numerator(z)/denominator(z) over `constraints` via the
/// Charnes-Cooper substitution w = t z, t = 1/denominator(z).
///
/// The denominator must be strictly positive on the feasible region. The
/// returned `objective_value` is the ratio at the de-homogenized point.
inline Solution solve_linear_fractional(const AffineForm& numerator, const AffineForm& denominator,
                                        const ConstraintSystem& constraints, ObjectiveSense sense,
                                        const Tolerances& tol = {}) {
  constraints.validate();
  const Index n = constraints.cols();
  if (numerator.coefficients.size() != n || denominator.coefficients.size() != n)
    throw std::invalid_argument("fractional objective length does not match the variable count");

  ProgramBuilder builder;
  builder.set_sense(sense);
  for (Index j = 0; j < n; ++j) {
    const double lo = constraints.lower[j] >= 0.0 ? 0.0 : -kInfinity;
    const double hi = constraints.upper[j] <= 0.0 ? 0.0 : kInfinity;
    builder.add_variable(lo, hi, numerator.coefficients[j]);
  }
  const Index scale = builder.add_variable(kMinimumScaling, kInfinity, numerator.constant);

  for (Index i = 0; i < constraints.rows(); ++i) {
    std::vector<std::pair<Index, double>> terms;
    for (Index j = 0; j < n; ++j) {
      if (constraints.matrix(i, j) != 0.0) terms.emplace_back(j, constraints.matrix(i, j));
    }
    terms.emplace_back(scale, -constraints.rhs[i]);
    builder.add_row(std::move(terms), constraints.senses[static_cast<std::size_t>(i)], 0.0);
  }
  for (Index j = 0; j < n; ++j) {
    const double lo = constraints.lower[j];
    const double hi = constraints.upper[j];
    if (std::isfinite(lo) && lo != 0.0)
      builder.add_row({{j, 1.0}, {scale, -lo}}, RowSense::greater_equal, 0.0);
    if (std::isfinite(hi) && hi != 0.0)
      builder.add_row({{j, 1.0}, {scale, -hi}}, RowSense::less_equal, 0.0);
  }
  std::vector<std::pair<Index, double>> normalization;
  for (Index j = 0; j < n; ++j) {
    if (denominator.coefficients[j] != 0.0) normalization.emplace_back(j, denominator.coefficients[j]);
  }
  normalization.emplace_back(scale, denominator.constant);
  builder.add_row(std::move(normalization), RowSense::equal, 1.0);

  const Solution homogenized = solve_lp(builder.build(), tol);
  Solution solution;
  solution.status = homogenized.status;
  if (!homogenized.optimal()) return solution;

  const double t = homogenized.variable_values[scale];
  Eigen::VectorXd z = homogenized.variable_values.head(n) / t;
  if (max_relative_violation(constraints, z) > kRecoveryTolerance) {
    solution.status = Status::infeasible;
    return solution;
  }
  for (Index j = 0; j < n; ++j) z[j] = std::clamp(z[j], constraints.lower[j], constraints.upper[j]);
  solution.variable_values = z;
  solution.objective_value = numerator(z) / denominator(z);
  solution.active_row_indices = active_rows(constraints, z, tol.feasibility);
  return solution;
}

}  // namespace dea::lp
