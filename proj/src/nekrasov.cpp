#include "nek/nekrasov.hpp"

#include <cmath>

#include "nek/errors.hpp"

namespace nek {

namespace {

std::vector<double> abs_diagonal_checked(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a.abs_at(i, i);
    if (d[i] == 0.0) {
      throw ZeroDiagonal(i);
    }
  }
  return d;
}

double upper_row_sum(const SquareMatrix& a, std::size_t i) {
  double sum = 0.0;
  for (std::size_t j = i + 1; j < a.dim(); ++j) {
    sum += a.abs_at(i, j);
  }
  return sum;
}

// Forward substitution for (|D|-|L|) y = rhs, consuming rhs in place.
void lower_solve_in_place(const SquareMatrix& a, const std::vector<double>& d,
                          std::vector<double>& rhs) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = rhs[i];
    for (std::size_t j = 0; j < i; ++j) {
      acc += a.abs_at(i, j) * rhs[j];
    }
    rhs[i] = acc / d[i];
  }
}

}  // namespace

std::vector<double> compute_h_recursive(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const std::vector<double> d = abs_diagonal_checked(a);
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = upper_row_sum(a, i);
    for (std::size_t j = 0; j < i; ++j) {
      acc += a.abs_at(i, j) / d[j] * h[j];
    }
    h[i] = acc;
  }
  return h;
}

std::vector<double> compute_h_by_solve(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const std::vector<double> d = abs_diagonal_checked(a);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = upper_row_sum(a, i);  // |U| e
  }
  lower_solve_in_place(a, d, y);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] *= d[i];
  }
  return y;
}

std::vector<double> compute_z(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const std::vector<double> d = abs_diagonal_checked(a);
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 1.0;
    for (std::size_t j = 0; j < i; ++j) {
      acc += a.abs_at(i, j) / d[j] * z[j];
    }
    z[i] = acc;
  }
  return z;
}

NekrasovProfile classify(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  NekrasovProfile profile;
  profile.n = n;
  profile.r.resize(n);

  std::vector<double> d(n);
  bool zero_diag = false;
  bool sdd = true;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a.abs_at(i, i);
    zero_diag = zero_diag || d[i] == 0.0;
    profile.r[i] = deleted_row_sum(a, i);
    sdd = sdd && d[i] > profile.r[i];
  }

  if (zero_diag) {
    // h_i is still well defined up to and including the first zero-diagonal
    // row; the first violation is found no later than that row.
    profile.verdict = Verdict::NotNekrasov;
    std::vector<double> h;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = upper_row_sum(a, i);
      for (std::size_t j = 0; j < i; ++j) {
        acc += a.abs_at(i, j) / d[j] * h[j];
      }
      h.push_back(acc);
      if (!(d[i] > acc)) {
        profile.witness = i;
        break;
      }
    }
    return profile;
  }

  profile.h = compute_h_recursive(a);
  profile.z = compute_z(a);
  profile.h_ratio.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    profile.h_ratio[i] = profile.h[i] / d[i];
  }

  if (sdd) {
    profile.verdict = Verdict::Sdd;
    return profile;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(d[i] > profile.h[i])) {
      profile.verdict = Verdict::NotNekrasov;
      profile.witness = i;
      return profile;
    }
  }
  profile.verdict = Verdict::NekrasovNotSdd;
  return profile;
}

bool szulc_check(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const std::vector<double> d = abs_diagonal_checked(a);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = upper_row_sum(a, i);
  }
  lower_solve_in_place(a, d, v);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(v[i] < 1.0)) {
      return false;
    }
  }
  return true;
}

}  // namespace nek
