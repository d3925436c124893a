#pragma once

// Full-dimensional efficient facets (FDEFs) of the VRS technology and the
// extended facet technology they generate.

#include "dea/common.hpp"
#include "dea/lp.hpp"
#include "dea/technology.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace dea {

/// Supporting hyperplane -v'x + u'y = psi, normalized so sum(v) + sum(u) = 1.
struct Hyperplane {
  Eigen::VectorXd v;
  Eigen::VectorXd u;
  double psi = 0.0;

  /// -v'x + u'y - psi; non-positive on the supported side.
  double evaluate(const Point& p) const { return -v.dot(p.x) + u.dot(p.y) - psi; }

  /// Distance to the hyperplane in objective units, psi + v'x - u'y.
  double slack(const Point& p) const { return -evaluate(p); }

  Eigen::VectorXd coefficients() const {
    Eigen::VectorXd c(v.size() + u.size() + 1);
    c << v, u, psi;
    return c;
  }
};

/// Rescales (v, u, psi) so the coefficients on (x, y) sum to one. Returns
/// nothing when the coefficient sum is not positive.
inline std::optional<Hyperplane> normalized(Eigen::VectorXd v, Eigen::VectorXd u, double psi) {
  const double total = v.sum() + u.sum();
  if (!(total > 0.0) || !std::isfinite(total)) return std::nullopt;
  return Hyperplane{v / total, u / total, psi / total};
}

struct Facet {
  Hyperplane hyperplane;
  std::vector<Index> members;  // J^k: every DMU on the hyperplane
};

/// The unique normalized hyperplane through exactly m+s points, if the points
/// are affinely independent and the fitted (v, u) is strictly positive.
inline std::optional<Hyperplane> fit_hyperplane(std::span<const Point> points,
                                                const Tolerances& tol = {}) {
  if (points.empty()) return std::nullopt;
  const Index m = points.front().inputs();
  const Index s = points.front().outputs();
  const Index dim = m + s;
  if (static_cast<Index>(points.size()) != dim)
    throw std::invalid_argument("fit_hyperplane needs exactly m+s points");

  // Unknowns (v, u, psi): -x_j'v + y_j'u - psi = 0 for each point, sum(v,u) = 1.
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(dim + 1, dim + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim + 1);
  for (Index j = 0; j < dim; ++j) {
    const Point& p = points[static_cast<std::size_t>(j)];
    detail::check_dimensions(p, m, s);
    system.row(j).head(m) = -p.x.transpose();
    system.row(j).segment(m, s) = p.y.transpose();
    system(j, dim) = -1.0;
  }
  system.row(dim).head(dim).setOnes();
  rhs[dim] = 1.0;

  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(tol.rank);
  if (lu.rank() < dim + 1) return std::nullopt;
  const Eigen::VectorXd c = lu.solve(rhs);
  if ((system * c - rhs).cwiseAbs().maxCoeff() > tol.feasibility) return std::nullopt;

  Hyperplane h{c.head(m), c.segment(m, s), c[dim]};
  if (h.v.minCoeff() <= tol.positivity || h.u.minCoeff() <= tol.positivity) return std::nullopt;
  return h;
}

namespace detail {

// Advances `idx` (sorted, values < n) to the next k-combination.
inline bool next_combination(std::vector<Index>& idx, Index n) {
  const auto k = static_cast<Index>(idx.size());
  for (Index pos = k - 1; pos >= 0; --pos) {
    auto& slot = idx[static_cast<std::size_t>(pos)];
    if (slot < n - k + pos) {
      ++slot;
      for (Index q = pos + 1; q < k; ++q)
        idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<long long> dedup_key(const Hyperplane& h) {
  const Eigen::VectorXd c = h.coefficients();
  std::vector<long long> key(static_cast<std::size_t>(c.size()));
  for (Index k = 0; k < c.size(); ++k) key[static_cast<std::size_t>(k)] = std::llround(c[k] * 1e9);
  return key;
}

inline std::vector<Index> strongly_efficient_dmus(const VrsTechnology& tech, const Tolerances& tol) {
  std::vector<Index> efficient;
  const Dataset& d = tech.dataset();
  for (Index j = 0; j < d.size(); ++j)
    if (classify(tech, d.dmu(j), tol) == EfficiencyStatus::StronglyEfficient)
      efficient.push_back(j);
  return efficient;
}

inline void sort_facets(std::vector<Facet>& facets) {
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.members != b.members) return a.members < b.members;
    const Eigen::VectorXd ca = a.hyperplane.coefficients();
    const Eigen::VectorXd cb = b.hyperplane.coefficients();
    return std::lexicographical_compare(ca.data(), ca.data() + ca.size(), cb.data(),
                                        cb.data() + cb.size());
  });
}

}  // namespace detail

/// Every FDEF of the VRS technology, found by scanning (m+s)-subsets of the
/// strongly efficient DMUs. Facets are ordered by their member lists.
///
/// Throws NoFacetError when no subset yields a strictly positive supporting
/// hyperplane.
inline std::vector<Facet> enumerate_fdefs(const VrsTechnology& tech, const Tolerances& tol = {}) {
  const Dataset& d = tech.dataset();
  const Index dim = d.input_count() + d.output_count();
  const std::vector<Index> efficient = detail::strongly_efficient_dmus(tech, tol);
  const auto e = static_cast<Index>(efficient.size());
  if (e < dim) throw NoFacetError();

  std::vector<Point> all;
  all.reserve(static_cast<std::size_t>(d.size()));
  for (Index j = 0; j < d.size(); ++j) all.push_back(d.dmu(j));

  std::vector<Facet> facets;
  std::set<std::vector<long long>> seen;
  std::vector<Index> pick(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) pick[static_cast<std::size_t>(k)] = k;
  std::vector<Point> subset(static_cast<std::size_t>(dim));
  do {
    for (Index k = 0; k < dim; ++k)
      subset[static_cast<std::size_t>(k)] =
          all[static_cast<std::size_t>(efficient[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])])];
    const auto h = fit_hyperplane(subset, tol);
    if (!h) continue;
    const bool supporting = std::all_of(all.begin(), all.end(), [&](const Point& p) {
      return h->evaluate(p) <= tol.feasibility;
    });
    if (!supporting || !seen.insert(detail::dedup_key(*h)).second) continue;

    Facet facet{*h, {}};
    for (Index j = 0; j < d.size(); ++j)
      if (std::abs(h->evaluate(all[static_cast<std::size_t>(j)])) <= tol.feasibility)
        facet.members.push_back(j);
    facets.push_back(std::move(facet));
  } while (detail::next_combination(pick, e));

  if (facets.empty()) throw NoFacetError();
  detail::sort_facets(facets);
  return facets;
}

/// P_EXFA: the nonnegative orthant cut by every FDEF halfspace.
class ExtendedTechnology {
public:
  /// `data` may be null for facets loaded without observations; the
  /// envelopment form is unavailable in that case.
  ExtendedTechnology(std::vector<Facet> facets, std::shared_ptr<const Dataset> data)
      : facets_(std::move(facets)), data_(std::move(data)) {
    if (facets_.empty()) throw NoFacetError();
    m_ = facets_.front().hyperplane.v.size();
    s_ = facets_.front().hyperplane.u.size();
    for (const Facet& f : facets_) {
      if (f.hyperplane.v.size() != m_ || f.hyperplane.u.size() != s_)
        throw DataError("facet dimensions disagree");
      if (data_) {
        for (Index j : f.members)
          if (j < 0 || j >= data_->size()) throw DataError("facet member index out of range");
      }
    }
    if (data_ && (data_->input_count() != m_ || data_->output_count() != s_))
      throw DataError("facet dimensions do not match the dataset");
  }

  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(Index k) const { return facets_.at(static_cast<std::size_t>(k)); }
  Index size() const { return static_cast<Index>(facets_.size()); }
  Index inputs() const { return m_; }
  Index outputs() const { return s_; }
  bool has_dataset() const { return static_cast<bool>(data_); }
  const Dataset& dataset() const {
    if (!data_) throw Error("extended technology has no dataset attached");
    return *data_;
  }
  const std::shared_ptr<const Dataset>& dataset_ptr() const { return data_; }

private:
  std::vector<Facet> facets_;
  std::shared_ptr<const Dataset> data_;
  Index m_ = 0;
  Index s_ = 0;
};

inline ExtendedTechnology build_exfa(const VrsTechnology& tech, const Tolerances& tol = {}) {
  return ExtendedTechnology(enumerate_fdefs(tech, tol), tech.dataset_ptr());
}

/// H-form membership: p >= 0 and -v'x + u'y <= psi on every facet.
inline bool exfa_contains(const ExtendedTechnology& exfa, const Point& p, const Tolerances& tol = {}) {
  detail::check_dimensions(p, exfa.inputs(), exfa.outputs());
  if (p.x.minCoeff() < -tol.feasibility || p.y.minCoeff() < -tol.feasibility) return false;
  return std::all_of(exfa.facets().begin(), exfa.facets().end(), [&](const Facet& f) {
    return f.hyperplane.evaluate(p) <= tol.feasibility;
  });
}

/// Indices of facets on which `p` lies within tolerance.
inline std::vector<Index> active_facets(const ExtendedTechnology& exfa, const Point& p,
                                        const Tolerances& tol = {}) {
  std::vector<Index> active;
  for (Index k = 0; k < exfa.size(); ++k)
    if (std::abs(exfa.facet(k).hyperplane.evaluate(p)) <= tol.feasibility) active.push_back(k);
  return active;
}

/// Envelopment-form membership: for every facet k some affine combination
/// (weights summing to one, sign-free) of the members J^k is dominated by p.
/// Requires an attached dataset.
inline bool exfa_contains_envelopment(const ExtendedTechnology& exfa, const Point& p,
                                      const Tolerances& tol = {}) {
  detail::check_dimensions(p, exfa.inputs(), exfa.outputs());
  if (p.x.minCoeff() < -tol.feasibility || p.y.minCoeff() < -tol.feasibility) return false;
  const Dataset& d = exfa.dataset();
  for (const Facet& f : exfa.facets()) {
    lp::ProgramBuilder b;
    const auto members = static_cast<Index>(f.members.size());
    const Index lambda = b.add_variables(members, -lp::kInfinity, lp::kInfinity);
    for (Index i = 0; i < exfa.inputs(); ++i) {
      detail::Terms row;
      for (Index q = 0; q < members; ++q)
        row.emplace_back(lambda + q, d.inputs(f.members[static_cast<std::size_t>(q)], i));
      b.add_row(std::move(row), lp::RowSense::less_equal, p.x[i]);
    }
    for (Index r = 0; r < exfa.outputs(); ++r) {
      detail::Terms row;
      for (Index q = 0; q < members; ++q)
        row.emplace_back(lambda + q, d.outputs(f.members[static_cast<std::size_t>(q)], r));
      b.add_row(std::move(row), lp::RowSense::greater_equal, p.y[r]);
    }
    detail::add_convexity(b, lambda, members);
    if (!lp::solve_lp(b.build(), tol).optimal()) return false;
  }
  return true;
}

struct FreeLunchReport {
  bool allows_free_lunch = false;
  std::vector<double> intercepts;
  std::optional<Point> witness;  // (0, y*) when free lunch exists
};

/// Free lunch exists iff every facet intercept is positive. The witness is
/// (0, y*) with y* maximizing sum(y) over {y >= 0 : u^k'y <= psi^k for all k}.
inline FreeLunchReport detect_free_lunch(const ExtendedTechnology& exfa, const Tolerances& tol = {}) {
  FreeLunchReport report;
  double smallest = lp::kInfinity;
  for (const Facet& f : exfa.facets()) {
    report.intercepts.push_back(f.hyperplane.psi);
    smallest = std::min(smallest, f.hyperplane.psi);
  }
  report.allows_free_lunch = smallest > 0.0;
  if (!report.allows_free_lunch) return report;

  lp::ProgramBuilder b;
  b.set_sense(lp::ObjectiveSense::maximize);
  const Index y = b.add_variables(exfa.outputs(), 0.0, lp::kInfinity, 1.0);
  for (const Facet& f : exfa.facets()) {
    detail::Terms row;
    for (Index r = 0; r < exfa.outputs(); ++r) row.emplace_back(y + r, f.hyperplane.u[r]);
    b.add_row(std::move(row), lp::RowSense::less_equal, f.hyperplane.psi);
  }
  const lp::Solution sol = lp::solve_lp(b.build(), tol);
  if (sol.optimal())
    report.witness = Point{Eigen::VectorXd::Zero(exfa.inputs()), sol.variable_values.cwiseMax(0.0)};
  return report;
}

inline constexpr Index kMaxFaceScanDmus = 16;

/// Whether the DMUs in `subset` lie on one hyperplane with strictly positive
/// (v, u) that supports every observed DMU.
inline bool on_common_efficient_face(const Dataset& d, std::span<const Index> subset,
                                     const Tolerances& tol = {}) {
  const Index m = d.input_count();
  const Index s = d.output_count();
  lp::ProgramBuilder b;
  b.set_sense(lp::ObjectiveSense::maximize);
  const Index v = b.add_variables(m, 0.0, lp::kInfinity);
  const Index u = b.add_variables(s, 0.0, lp::kInfinity);
  const Index psi = b.add_variable(-lp::kInfinity, lp::kInfinity);
  const Index margin = b.add_variable(0.0, 1.0, 1.0);
  std::vector<bool> in_subset(static_cast<std::size_t>(d.size()), false);
  for (Index j : subset) in_subset[static_cast<std::size_t>(j)] = true;
  for (Index j = 0; j < d.size(); ++j) {
    detail::Terms row;
    for (Index i = 0; i < m; ++i) row.emplace_back(v + i, -d.inputs(j, i));
    for (Index r = 0; r < s; ++r) row.emplace_back(u + r, d.outputs(j, r));
    row.emplace_back(psi, -1.0);
    b.add_row(std::move(row),
              in_subset[static_cast<std::size_t>(j)] ? lp::RowSense::equal : lp::RowSense::less_equal,
              0.0);
  }
  detail::Terms normalization;
  for (Index k = 0; k < m + s; ++k) normalization.emplace_back(v + k, 1.0);
  b.add_row(std::move(normalization), lp::RowSense::equal, 1.0);
  for (Index k = 0; k < m + s; ++k) b.add_row({{v + k, 1.0}, {margin, -1.0}}, lp::RowSense::greater_equal, 0.0);
  const lp::Solution sol = lp::solve_lp(b.build(), tol);
  return sol.optimal() && sol.objective_value > tol.positivity;
}

/// Member sets of the maximal efficient faces of the VRS technology (not
/// only full-dimensional ones). Their convex hulls cover the strongly
/// efficient frontier.
inline std::vector<std::vector<Index>> enumerate_efficient_faces(const VrsTechnology& tech,
                                                                 const Tolerances& tol = {}) {
  const Dataset& d = tech.dataset();
  const std::vector<Index> efficient = detail::strongly_efficient_dmus(tech, tol);
  const auto e = static_cast<Index>(efficient.size());
  if (e > kMaxFaceScanDmus) throw InstanceTooLarge();

  std::vector<std::vector<Index>> faces;
  for (Index size = e; size >= 1; --size) {
    std::vector<Index> pick(static_cast<std::size_t>(size));
    for (Index k = 0; k < size; ++k) pick[static_cast<std::size_t>(k)] = k;
    do {
      std::vector<Index> subset;
      for (Index k : pick) subset.push_back(efficient[static_cast<std::size_t>(k)]);
      const bool covered = std::any_of(faces.begin(), faces.end(), [&](const std::vector<Index>& f) {
        return std::includes(f.begin(), f.end(), subset.begin(), subset.end());
      });
      if (covered) continue;
      if (size == 1 || on_common_efficient_face(d, subset, tol)) faces.push_back(std::move(subset));
    } while (detail::next_combination(pick, e));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace dea
