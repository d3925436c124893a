#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace dea {

using Index = Eigen::Index;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input data (non-positive entries, bad files).
class DataError : public Error {
public:
  using Error::Error;
};

/// The technology has no full-dimensional efficient facet.
class NoFacetError : public Error {
public:
  NoFacetError() : Error("no FDEF exists") {}
};

/// A measure was requested for a point that is not in the technology.
class OutsideTechnology : public Error {
public:
  OutsideTechnology() : Error("point outside technology") {}
};

/// The simplex could not continue (singular basis or iteration limit).
class NumericalBreakdown : public Error {
public:
  explicit NumericalBreakdown(const std::string& what)
      : Error("numerical breakdown: " + what) {}
};

class InstanceTooLarge : public Error {
public:
  InstanceTooLarge() : Error("instance too large for vertex enumeration") {}
};

/// Numerical thresholds shared across modules.
struct Tolerances {
  double feasibility = 1e-7;     ///< primal feasibility and membership
  double optimality = 1e-9;      ///< reduced-cost test
  double pivot = 1e-11;          ///< smallest acceptable basis pivot after refactorization
  double ratio_pivot = 1e-9;     ///< smallest tableau entry usable in a ratio test
  double positivity = 1e-7;      ///< strict positivity of facet coefficients
  double classification = 1e-7;  ///< threshold on efficiency-test LP optima
  double rank = 1e-9;            ///< affine independence
  double improvement = 1e-7;     ///< relative change counted as an improvement item
};

}  // namespace dea
