#ifndef NEK_MATRIX_HPP
#define NEK_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace nek {

using Scalar = std::complex<double>;

/// Dense square matrix with real or complex entries, stored row-major.
///
/// Instances are immutable after construction and safe to share across
/// threads. Every entry is required to be finite; the constructor rejects
/// NaN and infinities.
class SquareMatrix {
public:
  /// n >= 1 and entries.size() == n*n, otherwise std::invalid_argument.
  SquareMatrix(std::size_t n, std::vector<Scalar> entries);

  static SquareMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  /// Entry modulus |a_ij|; all dominance arguments run on these.
  double abs_at(std::size_t i, std::size_t j) const {
    return std::abs(entries_[i * n_ + j]);
  }

  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  /// True when every entry has zero imaginary part.
  bool is_real() const noexcept;

  double max_abs() const noexcept;

private:
  std::size_t n_;
  std::vector<Scalar> entries_;
};

/// Comparison matrix of A: |a_ii| on the diagonal, -|a_ij| off it.
struct ComparisonMatrix {
  std::size_t n = 0;
  std::vector<double> entries;  // row-major

  double operator()(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }
};

/// Entrywise moduli of the splitting A = D - L - U: |D|, |L| and |U|.
/// strict_lower is zero on and above the diagonal, strict_upper zero on
/// and below it. For each row, diag[i] plus both strict row sums equals
/// the row sum of |A|.
struct TriangularSplit {
  std::size_t n = 0;
  std::vector<double> diag;
  std::vector<double> strict_lower;  // row-major
  std::vector<double> strict_upper;  // row-major
};

ComparisonMatrix comparison_matrix(const SquareMatrix& a);

TriangularSplit triangular_split(const SquareMatrix& a);

/// Deleted row sum r_i(A) = sum over j != i of |a_ij|.
/// i is 0-based; throws std::out_of_range when i >= dim.
double deleted_row_sum(const SquareMatrix& a, std::size_t i);

}  // namespace nek

#endif  // NEK_MATRIX_HPP
