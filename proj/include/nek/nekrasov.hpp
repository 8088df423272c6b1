#ifndef NEK_NEKRASOV_HPP
#define NEK_NEKRASOV_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nek/matrix.hpp"

namespace nek {

enum class Verdict {
  Sdd,             ///< |a_ii| > r_i(A) for every row.
  NekrasovNotSdd,  ///< |a_ii| > h_i(A) for every row, but not SDD.
  NotNekrasov,     ///< Some row has |a_ii| <= h_i(A).
};

/// Per-row dominance quantities and the classification verdict.
///
/// r, h, z and h_ratio = h_i/|a_ii| are indexed 0-based. h, z and h_ratio
/// are populated only when the whole diagonal is nonzero; r is always
/// populated. witness is the first row (0-based) violating |a_ii| > h_i
/// when the verdict is NotNekrasov.
struct NekrasovProfile {
  std::size_t n = 0;
  std::vector<double> r;
  std::vector<double> h;
  std::vector<double> z;
  std::vector<double> h_ratio;
  Verdict verdict = Verdict::NotNekrasov;
  std::optional<std::size_t> witness;

  bool has_quantities() const noexcept { return !h.empty(); }
  bool is_nekrasov() const noexcept { return verdict != Verdict::NotNekrasov; }
};

/// Row quantities h_1 = r_1(A) and, for i >= 2,
///   h_i = sum_{j<i} |a_ij|/|a_jj| * h_j  +  sum_{j>i} |a_ij|,
/// evaluated in increasing row order. Throws ZeroDiagonal.
std::vector<double> compute_h_recursive(const SquareMatrix& a);

/// Same vector obtained through the triangular identity
///   h_i = |a_ii| * [(|D|-|L|)^{-1} |U| e]_i,   e = (1,...,1)^T,
/// by forward substitution. An independent route used to cross-check
/// compute_h_recursive. Throws ZeroDiagonal.
std::vector<double> compute_h_by_solve(const SquareMatrix& a);

/// z_1 = 1 and z_i = sum_{j<i} |a_ij|/|a_jj| * z_j + 1. Equivalently
/// z_i = |a_ii| * y_i with (|D|-|L|) y = e. Throws ZeroDiagonal.
std::vector<double> compute_z(const SquareMatrix& a);

/// Full classification. A zero diagonal entry yields verdict NotNekrasov
/// with a witness rather than an error: the defining inequality
/// |a_ii| > h_i >= 0 already fails at such a row.
NekrasovProfile classify(const SquareMatrix& a);

/// Dominance characterization: true iff (|D|-|L|)^{-1}|U| e < e strictly
/// componentwise, i.e. iff A is a Nekrasov matrix. Throws ZeroDiagonal.
bool szulc_check(const SquareMatrix& a);

}  // namespace nek

#endif  // NEK_NEKRASOV_HPP
