#pragma once

#include "dea/common.hpp"
#include "dea/lp.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace dea {

/// An input-output vector (x, y).
struct Point {
  Eigen::VectorXd x;
  Eigen::VectorXd y;

  Index inputs() const { return x.size(); }
  Index outputs() const { return y.size(); }
};

/// Observed DMUs: row j of `inputs`/`outputs` is (x_j, y_j).
struct Dataset {
  std::vector<std::string> dmu_ids;
  Eigen::MatrixXd inputs;   // n x m
  Eigen::MatrixXd outputs;  // n x s
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;

  Index size() const { return inputs.rows(); }
  Index input_count() const { return inputs.cols(); }
  Index output_count() const { return outputs.cols(); }

  Point dmu(Index j) const { return {inputs.row(j).transpose(), outputs.row(j).transpose()}; }

  std::optional<Index> find(std::string_view id) const {
    for (std::size_t j = 0; j < dmu_ids.size(); ++j)
      if (dmu_ids[j] == id) return static_cast<Index>(j);
    return std::nullopt;
  }
};

/// Throws DataError unless the dataset is non-empty, consistently shaped,
/// strictly positive and has distinct ids.
inline void validate(const Dataset& data) {
  const Index n = data.size();
  if (n < 1 || data.input_count() < 1 || data.output_count() < 1)
    throw DataError("dataset needs at least one DMU, one input and one output");
  if (data.outputs.rows() != n || static_cast<Index>(data.dmu_ids.size()) != n)
    throw DataError("dataset rows disagree between ids, inputs and outputs");
  std::unordered_set<std::string> seen;
  for (const auto& id : data.dmu_ids)
    if (!seen.insert(id).second) throw DataError("duplicate DMU id '" + id + "'");
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < data.input_count(); ++i)
      if (!(data.inputs(j, i) > 0.0))
        throw DataError("non-positive data: input " + std::to_string(i + 1) + " of DMU '" +
                        data.dmu_ids[static_cast<std::size_t>(j)] + "'");
    for (Index r = 0; r < data.output_count(); ++r)
      if (!(data.outputs(j, r) > 0.0))
        throw DataError("non-positive data: output " + std::to_string(r + 1) + " of DMU '" +
                        data.dmu_ids[static_cast<std::size_t>(j)] + "'");
  }
}

enum class EfficiencyStatus { StronglyEfficient, WeaklyEfficient, Inefficient };

inline const char* to_string(EfficiencyStatus status) {
  switch (status) {
    case EfficiencyStatus::StronglyEfficient: return "strongly efficient";
    case EfficiencyStatus::WeaklyEfficient: return "weakly efficient";
    case EfficiencyStatus::Inefficient: return "inefficient";
  }
  return "?";
}

/// The VRS production possibility set spanned by a dataset under free
/// disposability. Immutable once built.
class VrsTechnology {
public:
  explicit VrsTechnology(std::shared_ptr<const Dataset> data) : data_(std::move(data)) {}

  const Dataset& dataset() const { return *data_; }
  const std::shared_ptr<const Dataset>& dataset_ptr() const { return data_; }
  Index intensity_dimension() const { return data_->size(); }
  Index inputs() const { return data_->input_count(); }
  Index outputs() const { return data_->output_count(); }

private:
  std::shared_ptr<const Dataset> data_;
};

inline VrsTechnology build_vrs(Dataset data) {
  validate(data);
  return VrsTechnology(std::make_shared<const Dataset>(std::move(data)));
}

namespace detail {

inline void check_dimensions(const Point& p, Index m, Index s) {
  if (p.inputs() != m || p.outputs() != s)
    throw DataError("point dimension does not match the technology");
}

using Terms = std::vector<std::pair<Index, double>>;

// sum_j lambda_j x_ji, with lambda occupying columns [lambda, lambda + n).
inline Terms input_terms(const Dataset& d, Index lambda, Index i) {
  Terms row;
  for (Index j = 0; j < d.size(); ++j) row.emplace_back(lambda + j, d.inputs(j, i));
  return row;
}

inline Terms output_terms(const Dataset& d, Index lambda, Index r) {
  Terms row;
  for (Index j = 0; j < d.size(); ++j) row.emplace_back(lambda + j, d.outputs(j, r));
  return row;
}

inline void add_convexity(lp::ProgramBuilder& b, Index lambda, Index n) {
  Terms row;
  for (Index j = 0; j < n; ++j) row.emplace_back(lambda + j, 1.0);
  b.add_row(std::move(row), lp::RowSense::equal, 1.0);
}

}  // namespace detail

/// Membership of `p` in the VRS technology (envelopment LP feasibility).
inline bool contains(const VrsTechnology& tech, const Point& p, const Tolerances& tol = {}) {
  const Dataset& d = tech.dataset();
  detail::check_dimensions(p, d.input_count(), d.output_count());
  lp::ProgramBuilder b;
  const Index lambda = b.add_variables(d.size(), 0.0, lp::kInfinity);
  for (Index i = 0; i < d.input_count(); ++i)
    b.add_row(detail::input_terms(d, lambda, i), lp::RowSense::less_equal, p.x[i]);
  for (Index r = 0; r < d.output_count(); ++r)
    b.add_row(detail::output_terms(d, lambda, r), lp::RowSense::greater_equal, p.y[r]);
  detail::add_convexity(b, lambda, d.size());
  return lp::solve_lp(b.build(), tol).optimal();
}

/// Strong efficiency via the additive (total slack) model, weak efficiency
/// via the uniform-improvement model. Throws OutsideTechnology when `p` is
/// not a member.
inline EfficiencyStatus classify(const VrsTechnology& tech, const Point& p,
                                 const Tolerances& tol = {}) {
  if (!contains(tech, p, tol)) throw OutsideTechnology();
  const Dataset& d = tech.dataset();
  const Index m = d.input_count();
  const Index s = d.output_count();

  {
    lp::ProgramBuilder b;
    b.set_sense(lp::ObjectiveSense::maximize);
    const Index lambda = b.add_variables(d.size(), 0.0, lp::kInfinity);
    const Index slack_in = b.add_variables(m, 0.0, lp::kInfinity, 1.0);
    const Index slack_out = b.add_variables(s, 0.0, lp::kInfinity, 1.0);
    for (Index i = 0; i < m; ++i) {
      auto row = detail::input_terms(d, lambda, i);
      row.emplace_back(slack_in + i, 1.0);
      b.add_row(std::move(row), lp::RowSense::equal, p.x[i]);
    }
    for (Index r = 0; r < s; ++r) {
      auto row = detail::output_terms(d, lambda, r);
      row.emplace_back(slack_out + r, -1.0);
      b.add_row(std::move(row), lp::RowSense::equal, p.y[r]);
    }
    detail::add_convexity(b, lambda, d.size());
    const lp::Solution additive = lp::solve_lp(b.build(), tol);
    if (additive.optimal() && additive.objective_value <= tol.classification)
      return EfficiencyStatus::StronglyEfficient;
  }

  lp::ProgramBuilder b;
  b.set_sense(lp::ObjectiveSense::maximize);
  const Index lambda = b.add_variables(d.size(), 0.0, lp::kInfinity);
  const Index step = b.add_variable(0.0, lp::kInfinity, 1.0);
  for (Index i = 0; i < m; ++i) {
    auto row = detail::input_terms(d, lambda, i);
    row.emplace_back(step, 1.0);
    b.add_row(std::move(row), lp::RowSense::less_equal, p.x[i]);
  }
  for (Index r = 0; r < s; ++r) {
    auto row = detail::output_terms(d, lambda, r);
    row.emplace_back(step, -1.0);
    b.add_row(std::move(row), lp::RowSense::greater_equal, p.y[r]);
  }
  detail::add_convexity(b, lambda, d.size());
  const lp::Solution uniform = lp::solve_lp(b.build(), tol);
  if (uniform.optimal() && uniform.objective_value <= tol.classification)
    return EfficiencyStatus::WeaklyEfficient;
  return EfficiencyStatus::Inefficient;
}

}  // namespace dea
