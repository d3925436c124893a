#pragma once

#include "dea/technology.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

inline dea::Dataset make(std::vector<std::string> ids, std::initializer_list<std::initializer_list<double>> x,
                         std::initializer_list<std::initializer_list<double>> y) {
  dea::Dataset d;
  d.dmu_ids = std::move(ids);
  const auto n = static_cast<Eigen::Index>(x.size());
  d.inputs.resize(n, static_cast<Eigen::Index>(x.begin()->size()));
  d.outputs.resize(n, static_cast<Eigen::Index>(y.begin()->size()));
  Eigen::Index j = 0;
  for (const auto& row : x) {
    Eigen::Index i = 0;
    for (double v : row) d.inputs(j, i++) = v;
    ++j;
  }
  j = 0;
  for (const auto& row : y) {
    Eigen::Index r = 0;
    for (double v : row) d.outputs(j, r++) = v;
    ++j;
  }
  for (Eigen::Index i = 0; i < d.inputs.cols(); ++i) d.input_names.push_back("x" + std::to_string(i + 1));
  for (Eigen::Index r = 0; r < d.outputs.cols(); ++r) d.output_names.push_back("y" + std::to_string(r + 1));
  return d;
}

// Six DMUs, one input, one output.
inline dea::Dataset six_units() {
  return make({"A", "B", "C", "D", "E", "F"}, {{1}, {2}, {5}, {1}, {1.5}, {20}}, {{4}, {5}, {6}, {2}, {2}, {2}});
}

// Five DMUs, two inputs, one output; D dominates E.
inline dea::Dataset two_inputs() {
  return make({"A", "B", "C", "D", "E"}, {{1, 1}, {10, 5}, {5, 10}, {10, 1}, {10, 5}}, {{8}, {10}, {10}, {8}, {8}});
}

// Two DMUs whose only facet has a negative intercept.
inline dea::Dataset ab() { return make({"A", "B"}, {{1}, {2}}, {{1}, {3}}); }

inline dea::Point pt(std::initializer_list<double> x, std::initializer_list<double> y) {
  dea::Point p{Eigen::VectorXd(static_cast<Eigen::Index>(x.size())), Eigen::VectorXd(static_cast<Eigen::Index>(y.size()))};
  Eigen::Index k = 0;
  for (double v : x) p.x[k++] = v;
  k = 0;
  for (double v : y) p.y[k++] = v;
  return p;
}

}  // namespace fixtures
