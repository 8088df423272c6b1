#include "nek/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nek/errors.hpp"

namespace nek {

namespace {

NekrasovProfile require_nekrasov(const SquareMatrix& a) {
  NekrasovProfile profile = classify(a);
  if (!profile.is_nekrasov()) {
    throw NotNekrasov(profile.witness);
  }
  return profile;
}

double dominance_margin(const SquareMatrix& a, const NekrasovProfile& p) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.n; ++i) {
    margin = std::min(margin, a.abs_at(i, i) - p.h[i]);
  }
  return margin;
}

OptimalBound optimal_ratio_impl(const ParamBoundEvaluator& eval,
                                const SquareMatrix& a,
                                const NekrasovProfile& p) {
  if (a.dim() < 2) {
    throw DimensionTooSmall("optimal_mu_ratio");
  }
  double rest = 0.0;
  for (std::size_t i = 1; i < p.n; ++i) {
    rest = std::max(rest, p.h_ratio[i]);
  }
  OptimalBound result;
  result.mu_star = 1.0 + p.h_ratio[0] - rest;
  result.value = eval.ratio(result.mu_star);
  result.case_tag = p.h_ratio[0] > rest ? OptimalCase::StrictImprovement
                                        : OptimalCase::EqualsBaseline;
  return result;
}

OptimalBound optimal_diff_impl(const ParamBoundEvaluator& eval,
                               const SquareMatrix& a,
                               const NekrasovProfile& p) {
  if (a.dim() < 2) {
    throw DimensionTooSmall("optimal_mu_diff");
  }
  const double abs_a11 = a.abs_at(0, 0);
  double rest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < p.n; ++i) {
    rest = std::min(rest, a.abs_at(i, i) - p.h[i]);
  }
  OptimalBound result;
  result.mu_star = (rest + p.h[0]) / abs_a11;
  result.value = eval.diff(result.mu_star);
  result.case_tag = abs_a11 - p.h[0] < rest ? OptimalCase::StrictImprovement
                                            : OptimalCase::EqualsBaseline;
  return result;
}

double baseline_ratio_impl(const SquareMatrix& a, const NekrasovProfile& p) {
  double z_ratio_max = 0.0;
  double h_ratio_max = 0.0;
  for (std::size_t i = 0; i < p.n; ++i) {
    z_ratio_max = std::max(z_ratio_max, p.z[i] / a.abs_at(i, i));
    h_ratio_max = std::max(h_ratio_max, p.h_ratio[i]);
  }
  return z_ratio_max / (1.0 - h_ratio_max);
}

double baseline_diff_impl(const SquareMatrix& a, const NekrasovProfile& p) {
  double z_max = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.n; ++i) {
    z_max = std::max(z_max, p.z[i]);
    margin = std::min(margin, a.abs_at(i, i) - p.h[i]);
  }
  return z_max / margin;
}

}  // namespace

ParamBoundEvaluator::ParamBoundEvaluator(const SquareMatrix& a)
    : n_(a.dim()) {
  const NekrasovProfile p = require_nekrasov(a);
  abs_a11_ = a.abs_at(0, 0);
  h1_ = p.h[0];
  h_ratio_1_ = p.h_ratio[0];
  threshold_ = p.r[0] / abs_a11_;
  rest_ratio_max_ = 0.0;
  rest_margin_min_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n_; ++i) {
    rest_ratio_max_ = std::max(rest_ratio_max_, p.h_ratio[i]);
    rest_margin_min_ =
        std::min(rest_margin_min_, a.abs_at(i, i) - p.h[i]);
  }
  z_ratio_max_ = 0.0;
  z_max_ = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    z_ratio_max_ = std::max(z_ratio_max_, p.z[i] / a.abs_at(i, i));
    z_max_ = std::max(z_max_, p.z[i]);
  }
}

void ParamBoundEvaluator::require_admissible(double mu) const {
  if (!(mu > threshold_)) {
    throw MuOutOfRange(mu, threshold_);
  }
}

double ParamBoundEvaluator::ratio(double mu) const {
  require_admissible(mu);
  double inner = 1.0 / (mu - h_ratio_1_);
  if (n_ > 1) {
    inner = std::max(inner, 1.0 / (1.0 - rest_ratio_max_));
  }
  return std::max(mu, 1.0) * z_ratio_max_ * inner;
}

double ParamBoundEvaluator::diff(double mu) const {
  require_admissible(mu);
  double denom = mu * abs_a11_ - h1_;
  if (n_ > 1) {
    denom = std::min(denom, rest_margin_min_);
  }
  return std::max(mu, 1.0) * z_max_ / denom;
}

double varah_bound(const SquareMatrix& a) {
  const NekrasovProfile p = classify(a);
  if (p.verdict != Verdict::Sdd) {
    throw NotSdd();
  }
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.n; ++i) {
    margin = std::min(margin, a.abs_at(i, i) - p.r[i]);
  }
  return 1.0 / margin;
}

double bound_baseline_ratio(const SquareMatrix& a) {
  return baseline_ratio_impl(a, require_nekrasov(a));
}

double bound_baseline_diff(const SquareMatrix& a) {
  return baseline_diff_impl(a, require_nekrasov(a));
}

double bound_param_ratio(const SquareMatrix& a, double mu) {
  return ParamBoundEvaluator(a).ratio(mu);
}

double bound_param_diff(const SquareMatrix& a, double mu) {
  return ParamBoundEvaluator(a).diff(mu);
}

OptimalBound optimal_mu_ratio(const SquareMatrix& a) {
  const NekrasovProfile p = require_nekrasov(a);
  return optimal_ratio_impl(ParamBoundEvaluator(a), a, p);
}

OptimalBound optimal_mu_diff(const SquareMatrix& a) {
  const NekrasovProfile p = require_nekrasov(a);
  return optimal_diff_impl(ParamBoundEvaluator(a), a, p);
}

BoundReport full_report(const SquareMatrix& a, std::optional<double> mu) {
  const NekrasovProfile p = require_nekrasov(a);
  const ParamBoundEvaluator eval(a);

  BoundReport report;
  if (p.verdict == Verdict::Sdd) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.n; ++i) {
      margin = std::min(margin, a.abs_at(i, i) - p.r[i]);
    }
    report.varah = 1.0 / margin;
  }
  report.baseline_ratio = baseline_ratio_impl(a, p);
  report.baseline_diff = baseline_diff_impl(a, p);
  if (mu && *mu > eval.mu_threshold()) {
    report.param_ratio = ParamBound{*mu, eval.ratio(*mu)};
    report.param_diff = ParamBound{*mu, eval.diff(*mu)};
  }
  if (a.dim() >= 2) {
    report.optimal_ratio = optimal_ratio_impl(eval, a, p);
    report.optimal_diff = optimal_diff_impl(eval, a, p);
  }
  report.margin = dominance_margin(a, p);
  return report;
}

MuSweep mu_sweep(const SquareMatrix& a, double mu_min, double mu_max,
                 double step) {
  if (!(step > 0.0) || !(mu_min < mu_max) || !std::isfinite(mu_min) ||
      !std::isfinite(mu_max) || !std::isfinite(step)) {
    throw std::invalid_argument("mu grid requires mu_min < mu_max and step > 0");
  }
  const ParamBoundEvaluator eval(a);

  MuSweep sweep;
  sweep.mu_min = mu_min;
  sweep.mu_max = mu_max;
  sweep.step = step;
  // Tolerate accumulated rounding at the top of the grid so that an exact
  // final point (mu_min + k*step == mu_max) is not dropped.
  const double slack = step * 1e-9;
  for (std::size_t k = 0;; ++k) {
    double mu = mu_min + static_cast<double>(k) * step;
    if (mu > mu_max + slack) {
      break;
    }
    if (std::abs(mu - mu_max) <= slack) {
      mu = mu_max;
    }
    if (mu > eval.mu_threshold()) {
      sweep.rows.push_back(MuSweepRow{mu, eval.ratio(mu), eval.diff(mu)});
    }
  }
  if (sweep.rows.empty()) {
    throw EmptyGrid();
  }
  return sweep;
}

}  // namespace nek
