#ifndef NEK_ORACLE_HPP
#define NEK_ORACLE_HPP

#include <cstddef>
#include <cstdint>

#include "nek/matrix.hpp"

namespace nek {

/// Ground-truth infinity norm of A^{-1}, with the elimination diagnostic
/// that produced it.
struct ExactNorm {
  double value = 0.0;
  /// Largest intermediate entry magnitude over the largest input magnitude
  /// seen during elimination.
  double pivot_growth = 1.0;

  bool near_singular() const noexcept { return pivot_growth > 1e12; }
};

/// Computes ||A^{-1}||_inf by LU factorization with partial pivoting and a
/// pair of triangular solves per identity column. Throws SingularMatrix
/// when a pivot column is exactly zero.
ExactNorm exact_inverse_inf_norm(const SquareMatrix& a);

/// Deterministic random Nekrasov-matrix recipe; identical configs yield
/// identical matrices.
struct GeneratorConfig {
  std::size_t n = 4;             ///< dimension, >= 2
  std::uint64_t seed = 0;
  double off_diag_scale = 1.0;   ///< > 0; off-diagonal entries lie in [-s, s]
  double sdd_fraction = 0.0;     ///< in [0,1]: chance the matrix is forced SDD
  bool allow_complex = false;
};

/// Draws random off-diagonal entries, then walks the rows in order setting
/// each |a_ii| to the row's h_i times a uniform factor in (1, 2], so the
/// result always classifies as Nekrasov. With probability sdd_fraction the
/// diagonal is inflated above r_i as well, forcing SDD. Diagonal signs are
/// random; off-diagonals get random phases when allow_complex is set.
/// Throws std::invalid_argument on a config violating its invariants.
SquareMatrix generate_nekrasov(const GeneratorConfig& config);

enum class BoundKind { Ratio, Diff };

struct GridMin {
  double mu = 0.0;
  double value = 0.0;
};

/// Grid minimizer of the selected parametrized bound over
/// mu_lo, mu_lo+step, ..., mu_hi. Inadmissible grid points (at or below
/// r_1/|a_11|) are skipped. Independent search oracle for the closed-form
/// optimal-mu selectors. Throws NotNekrasov, EmptyGrid.
GridMin brute_force_bound_min(const SquareMatrix& a, BoundKind kind,
                              double mu_lo, double mu_hi, double step);

}  // namespace nek

#endif  // NEK_ORACLE_HPP
