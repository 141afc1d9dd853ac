#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmat {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Order is not supported by the requested operation (e.g. fast paths
/// require a power of two >= 4).
class InvalidOrderError : public Error {
 public:
  explicit InvalidOrderError(const std::string& what) : Error(what) {}
};

/// A vector carries (or was required to carry) the wrong symmetry structure.
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error(what) {}
};

/// A linear side constraint (zero sum / zero alternating sum) is violated.
class ConstraintError : public Error {
 public:
  explicit ConstraintError(const std::string& what) : Error(what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Dense input passed to component extraction is not a gamma matrix.
class NotGammaMatrixError : public Error {
 public:
  NotGammaMatrixError(const std::string& what, double mismatch)
      : Error(what), mismatch_(mismatch) {}
  double mismatch() const { return mismatch_; }

 private:
  double mismatch_;
};

/// An eigenvalue fell below the singularity threshold; carries the index.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, int index, double value)
      : Error(what), index_(index), value_(value) {}
  int index() const { return index_; }
  double value() const { return value_; }

 private:
  int index_;
  double value_;
};

class IndefiniteMatrixError : public Error {
 public:
  explicit IndefiniteMatrixError(const std::string& what) : Error(what) {}
};

/// The closed-form Toeplitz approximation disagreed with the projection
/// oracle (or violated its own stationarity constraints).  Carries both
/// outputs so callers can dump them.
class FormulaDiscrepancyError : public Error {
 public:
  FormulaDiscrepancyError(const std::string& what, std::vector<double> formula_c,
                          std::vector<double> formula_b, std::vector<double> oracle_c,
                          std::vector<double> oracle_b, double max_deviation)
      : Error(what),
        formula_c_(std::move(formula_c)),
        formula_b_(std::move(formula_b)),
        oracle_c_(std::move(oracle_c)),
        oracle_b_(std::move(oracle_b)),
        max_deviation_(max_deviation) {}

  const std::vector<double>& formula_c() const { return formula_c_; }
  const std::vector<double>& formula_b() const { return formula_b_; }
  const std::vector<double>& oracle_c() const { return oracle_c_; }
  const std::vector<double>& oracle_b() const { return oracle_b_; }
  double max_deviation() const { return max_deviation_; }

 private:
  std::vector<double> formula_c_, formula_b_, oracle_c_, oracle_b_;
  double max_deviation_;
};

}  // namespace gmat
