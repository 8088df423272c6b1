#include "nek/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "nek/bounds.hpp"
#include "nek/errors.hpp"
#include "nek/nekrasov.hpp"

namespace nek {

namespace {

struct LuFactors {
  std::size_t n = 0;
  std::vector<Scalar> lu;        // row-major; unit L below, U on and above
  std::vector<std::size_t> piv;  // row swapped with row k at step k
  double growth = 1.0;
};

LuFactors lu_factor(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  LuFactors f;
  f.n = n;
  f.lu = a.entries();
  f.piv.resize(n);

  const double input_max = a.max_abs();
  double running_max = input_max;

  auto at = [&](std::size_t i, std::size_t j) -> Scalar& {
    return f.lu[i * n + j];
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(at(i, k));
      if (m > best) {
        best = m;
        p = i;
      }
    }
    if (best == 0.0) {
      throw SingularMatrix(k);
    }
    f.piv[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(at(k, j), at(p, j));
      }
    }
    const Scalar pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar mult = at(i, k) / pivot;
      at(i, k) = mult;
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) -= mult * at(k, j);
        running_max = std::max(running_max, std::abs(at(i, j)));
      }
    }
  }
  f.growth = running_max / input_max;
  return f;
}

// Solves A x = b in place using the factorization.
void lu_solve(const LuFactors& f, std::vector<Scalar>& b) {
  const std::size_t n = f.n;
  for (std::size_t k = 0; k < n; ++k) {
    if (f.piv[k] != k) {
      std::swap(b[k], b[f.piv[k]]);
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    Scalar acc = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      acc -= f.lu[i * n + j] * b[j];
    }
    b[i] = acc;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Scalar acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      acc -= f.lu[ii * n + j] * b[j];
    }
    b[ii] = acc / f.lu[ii * n + ii];
  }
}

// Uniform draws decoupled from library distribution internals so a seed
// reproduces the same matrix everywhere.
class UniformSource {
public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace

ExactNorm exact_inverse_inf_norm(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const LuFactors f = lu_factor(a);

  std::vector<double> row_sums(n, 0.0);
  std::vector<Scalar> column(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(column.begin(), column.end(), Scalar(0.0));
    column[c] = Scalar(1.0);
    lu_solve(f, column);
    for (std::size_t i = 0; i < n; ++i) {
      row_sums[i] += std::abs(column[i]);
    }
  }
  ExactNorm result;
  result.value = *std::max_element(row_sums.begin(), row_sums.end());
  result.pivot_growth = f.growth;
  return result;
}

SquareMatrix generate_nekrasov(const GeneratorConfig& config) {
  if (config.n < 2) {
    throw std::invalid_argument("generator requires n >= 2");
  }
  if (!(config.off_diag_scale > 0.0) || !std::isfinite(config.off_diag_scale)) {
    throw std::invalid_argument("off_diag_scale must be positive and finite");
  }
  if (!(config.sdd_fraction >= 0.0 && config.sdd_fraction <= 1.0)) {
    throw std::invalid_argument("sdd_fraction must lie in [0, 1]");
  }

  const std::size_t n = config.n;
  const double scale = config.off_diag_scale;
  UniformSource rng(config.seed);

  const bool force_sdd = rng.unit() < config.sdd_fraction;

  std::vector<Scalar> entries(n * n, Scalar(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      const double re = rng.range(-scale, scale);
      const double im = config.allow_complex ? rng.range(-scale, scale) : 0.0;
      entries[i * n + j] = Scalar(re, im);
    }
  }

  // Walk rows in order: h_i depends only on earlier diagonals, so fixing
  // |a_ii| just above h_i (or above r_i as well, for SDD) certifies
  // membership row by row.
  std::vector<double> h(n, 0.0);
  std::vector<double> diag(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double hi = 0.0;
    double ri = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        continue;
      }
      const double m = std::abs(entries[i * n + j]);
      ri += m;
      if (j < i) {
        hi += m / diag[j] * h[j];
      } else {
        hi += m;
      }
    }
    h[i] = hi;
    double base = force_sdd ? std::max(hi, ri) : hi;
    base = std::max(base, 1e-8);  // in case a whole row drew ~zero
    const double factor = 2.0 - rng.unit();  // (1, 2]
    diag[i] = base * factor;
    const double sign = rng.unit() < 0.5 ? -1.0 : 1.0;
    entries[i * n + i] = Scalar(sign * diag[i]);
  }

  return SquareMatrix(n, std::move(entries));
}

GridMin brute_force_bound_min(const SquareMatrix& a, BoundKind kind,
                              double mu_lo, double mu_hi, double step) {
  if (!(step > 0.0) || !(mu_lo < mu_hi)) {
    throw std::invalid_argument("grid requires mu_lo < mu_hi and step > 0");
  }
  const ParamBoundEvaluator eval(a);

  GridMin best;
  bool found = false;
  const double slack = step * 1e-9;
  for (std::size_t k = 0;; ++k) {
    const double mu = mu_lo + static_cast<double>(k) * step;
    if (mu > mu_hi + slack) {
      break;
    }
    if (!(mu > eval.mu_threshold())) {
      continue;
    }
    const double value = kind == BoundKind::Ratio ? eval.ratio(mu)
                                                  : eval.diff(mu);
    if (!found || value < best.value) {
      best = GridMin{mu, value};
      found = true;
    }
  }
  if (!found) {
    throw EmptyGrid();
  }
  return best;
}

}  // namespace nek
