#ifndef NEK_BOUNDS_HPP
#define NEK_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nek/matrix.hpp"
#include "nek/nekrasov.hpp"

namespace nek {

enum class OptimalCase {
  /// The minimizing mu* beats the baseline strictly.
  StrictImprovement,
  /// The formulas collapse and the optimum equals the baseline.
  EqualsBaseline,
};

struct OptimalBound {
  double mu_star = 0.0;
  double value = 0.0;
  OptimalCase case_tag = OptimalCase::EqualsBaseline;
};

struct ParamBound {
  double mu = 0.0;
  double value = 0.0;
};

/// Every inverse-infinity-norm bound the library knows, in one record.
/// varah is absent when the matrix is not SDD; param_* are absent unless a
/// mu was supplied and admissible; optimal_* are absent for 1x1 matrices.
struct BoundReport {
  std::optional<double> varah;
  double baseline_ratio = 0.0;
  double baseline_diff = 0.0;
  std::optional<ParamBound> param_ratio;
  std::optional<ParamBound> param_diff;
  std::optional<OptimalBound> optimal_ratio;
  std::optional<OptimalBound> optimal_diff;
  /// min_i (|a_ii| - h_i(A)); how far the matrix is from losing membership.
  double margin = 0.0;
};

struct MuSweepRow {
  double mu = 0.0;
  double bound_ratio = 0.0;
  double bound_diff = 0.0;
};

/// Tabulated parametrized bounds over a mu grid, for plot-data export.
/// Grid points at or below r_1(A)/|a_11| are omitted; rows are strictly
/// increasing in mu.
struct MuSweep {
  std::vector<MuSweepRow> rows;
  double mu_min = 0.0;
  double mu_max = 0.0;
  double step = 0.0;
};

/// Classic SDD bound 1 / min_i (|a_ii| - r_i(A)). Throws NotSdd.
double varah_bound(const SquareMatrix& a);

/// Nekrasov bound  max_i(z_i/|a_ii|) / (1 - max_i h_i/|a_ii|).
/// Throws NotNekrasov.
double bound_baseline_ratio(const SquareMatrix& a);

/// Nekrasov bound  max_i z_i / min_i(|a_ii| - h_i). Throws NotNekrasov.
double bound_baseline_diff(const SquareMatrix& a);

/// Scaled-variant bound for the one-parameter family D(mu)=diag(mu,1,...,1):
///
///   max{mu,1} * max_i(z_i/|a_ii|) *
///       max{ 1/(mu - h_1/|a_11|), 1/(1 - max_{i!=1} h_i/|a_ii|) }
///
/// defined for mu > r_1(A)/|a_11|. For n = 1 the second operand of the inner
/// max is an empty-set maximum and is dropped. Throws NotNekrasov,
/// MuOutOfRange.
double bound_param_ratio(const SquareMatrix& a, double mu);

/// Companion bound
///
///   max{mu,1} * max_i z_i /
///       min{ mu*|a_11| - h_1, min_{i!=1}(|a_ii| - h_i) }
///
/// for mu > r_1(A)/|a_11|; the second operand of the min is dropped for
/// n = 1. Throws NotNekrasov, MuOutOfRange.
double bound_param_diff(const SquareMatrix& a, double mu);

/// Closed-form minimizer of bound_param_ratio over its admissible interval:
/// mu* = 1 + h_1/|a_11| - max_{i!=1} h_i/|a_ii|. When h_1/|a_11| exceeds
/// max_{i!=1} h_i/|a_ii| the optimum improves strictly on the ratio
/// baseline; otherwise it reproduces it. Throws NotNekrasov,
/// DimensionTooSmall for n = 1.
OptimalBound optimal_mu_ratio(const SquareMatrix& a);

/// Closed-form minimizer of bound_param_diff:
/// mu* = (min_{i!=1}(|a_ii| - h_i) + h_1) / |a_11|. Strict improvement when
/// |a_11| - h_1 < min_{i!=1}(|a_ii| - h_i). Throws NotNekrasov,
/// DimensionTooSmall.
OptimalBound optimal_mu_diff(const SquareMatrix& a);

/// Aggregates every applicable bound. Throws NotNekrasov.
BoundReport full_report(const SquareMatrix& a,
                        std::optional<double> mu = std::nullopt);

/// Samples both parametrized bounds on mu_min, mu_min+step, ..., mu_max.
/// Requires mu_min < mu_max and step > 0 (std::invalid_argument otherwise).
/// Throws NotNekrasov, EmptyGrid when no grid point is admissible.
MuSweep mu_sweep(const SquareMatrix& a, double mu_min, double mu_max,
                 double step);

/// Precomputed per-matrix state for repeated parametrized-bound evaluation
/// (sweeps, grid searches). Construction throws NotNekrasov.
class ParamBoundEvaluator {
public:
  explicit ParamBoundEvaluator(const SquareMatrix& a);

  std::size_t dim() const noexcept { return n_; }
  /// Admissibility threshold r_1(A)/|a_11|; bounds exist for mu above it.
  double mu_threshold() const noexcept { return threshold_; }

  double ratio(double mu) const;  ///< bound_param_ratio at mu.
  double diff(double mu) const;   ///< bound_param_diff at mu.

private:
  void require_admissible(double mu) const;

  std::size_t n_;
  double threshold_;
  double abs_a11_;
  double h1_;
  double h_ratio_1_;
  double rest_ratio_max_;   // max_{i!=1} h_i/|a_ii|; 0 when n == 1
  double rest_margin_min_;  // min_{i!=1}(|a_ii| - h_i); +inf when n == 1
  double z_ratio_max_;      // max_i z_i/|a_ii|
  double z_max_;            // max_i z_i
};

}  // namespace nek

#endif  // NEK_BOUNDS_HPP
