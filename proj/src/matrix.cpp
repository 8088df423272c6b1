#include "nek/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nek {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Scalar> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw std::invalid_argument("matrix dimension must be at least 1");
  }
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("entry count does not match dimension");
  }
  for (const Scalar& v : entries_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  std::vector<Scalar> e(n * n, Scalar(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = Scalar(1.0);
  }
  return SquareMatrix(n, std::move(e));
}

bool SquareMatrix::is_real() const noexcept {
  for (const Scalar& v : entries_) {
    if (v.imag() != 0.0) {
      return false;
    }
  }
  return true;
}

double SquareMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const Scalar& v : entries_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

ComparisonMatrix comparison_matrix(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  ComparisonMatrix c;
  c.n = n;
  c.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double m = a.abs_at(i, j);
      c.entries[i * n + j] = (i == j) ? m : -m;
    }
  }
  return c;
}

TriangularSplit triangular_split(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  TriangularSplit s;
  s.n = n;
  s.diag.resize(n);
  s.strict_lower.assign(n * n, 0.0);
  s.strict_upper.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    s.diag[i] = a.abs_at(i, i);
    for (std::size_t j = 0; j < i; ++j) {
      s.strict_lower[i * n + j] = a.abs_at(i, j);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      s.strict_upper[i * n + j] = a.abs_at(i, j);
    }
  }
  return s;
}

double deleted_row_sum(const SquareMatrix& a, std::size_t i) {
  const std::size_t n = a.dim();
  if (i >= n) {
    throw std::out_of_range("row index out of range");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) {
      sum += a.abs_at(i, j);
    }
  }
  return sum;
}

}  // namespace nek
