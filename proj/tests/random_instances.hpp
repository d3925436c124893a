#pragma once

#include "dea/facets.hpp"

#include <random>
#include <string>

namespace fixtures {

struct Instance {
  dea::VrsTechnology tech;
  dea::ExtendedTechnology exfa;
};

inline dea::Dataset random_dataset(std::mt19937_64& rng, Eigen::Index n, Eigen::Index m, Eigen::Index s) {
  std::uniform_real_distribution<double> value(1.0, 10.0);
  dea::Dataset d;
  d.inputs.resize(n, m);
  d.outputs.resize(n, s);
  for (Eigen::Index j = 0; j < n; ++j) {
    d.dmu_ids.push_back("D" + std::to_string(j + 1));
    for (Eigen::Index i = 0; i < m; ++i) d.inputs(j, i) = value(rng);
    for (Eigen::Index r = 0; r < s; ++r) d.outputs(j, r) = value(rng);
  }
  for (Eigen::Index i = 0; i < m; ++i) d.input_names.push_back("x" + std::to_string(i + 1));
  for (Eigen::Index r = 0; r < s; ++r) d.output_names.push_back("y" + std::to_string(r + 1));
  return d;
}

/// 1-3 inputs, 1-2 outputs, 4-10 DMUs with data in [1, 10]; redrawn until
/// at least one FDEF exists.
inline Instance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<Eigen::Index> inputs(1, 3), outputs(1, 2), dmus(4, 10);
  while (true) {
    const Eigen::Index m = inputs(rng), s = outputs(rng), n = dmus(rng);
    auto tech = dea::build_vrs(random_dataset(rng, n, m, s));
    try {
      auto exfa = dea::build_exfa(tech);
      return {std::move(tech), std::move(exfa)};
    } catch (const dea::NoFacetError&) {
    }
  }
}

/// Fixed-seed list of instances shared by the property suites.
inline std::vector<Instance> random_instances(std::size_t count, std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (out.size() < count) out.push_back(random_instance(rng));
  return out;
}

}  // namespace fixtures
