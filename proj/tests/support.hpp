#ifndef NEK_TESTS_SUPPORT_HPP
#define NEK_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "nek/io.hpp"
#include "nek/matrix.hpp"

namespace nektest {

inline nek::SquareMatrix make_real(std::size_t n,
                                   std::initializer_list<double> values) {
  std::vector<nek::Scalar> entries;
  entries.reserve(values.size());
  for (double v : values) {
    entries.emplace_back(v);
  }
  return nek::SquareMatrix(n, std::move(entries));
}

inline nek::SquareMatrix make_complex(
    std::size_t n, std::initializer_list<nek::Scalar> values) {
  return nek::SquareMatrix(n, std::vector<nek::Scalar>(values));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(NEK_DATA_DIR) + "/" + name;
}

inline nek::SquareMatrix load_fixture(const std::string& name) {
  return nek::load_matrix_file(fixture_path(name));
}

inline double rel_err(double got, double want) {
  if (want == 0.0) {
    return std::abs(got);
  }
  return std::abs(got - want) / std::abs(want);
}

// Random dense matrix with diagonal bounded away from zero; not necessarily
// Nekrasov. Used by cross-algorithm and round-trip properties.
inline nek::SquareMatrix random_matrix(std::mt19937_64& rng, std::size_t n,
                                       bool complex_entries) {
  std::uniform_real_distribution<double> off(-3.0, 3.0);
  std::uniform_real_distribution<double> diag(0.5, 8.0);
  std::vector<nek::Scalar> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        const double sign = (rng() & 1) ? 1.0 : -1.0;
        entries[i * n + j] = nek::Scalar(sign * diag(rng));
      } else {
        entries[i * n + j] = complex_entries
                                 ? nek::Scalar(off(rng), off(rng))
                                 : nek::Scalar(off(rng));
      }
    }
  }
  return nek::SquareMatrix(n, std::move(entries));
}

// Independent z oracle: solves (|D|-|L|) y = e by forward substitution and
// returns |a_ii| * y_i. Deliberately separate from the library recursion.
inline std::vector<double> z_by_solve(const nek::SquareMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 1.0;
    for (std::size_t j = 0; j < i; ++j) {
      acc += a.abs_at(i, j) * y[j];
    }
    y[i] = acc / a.abs_at(i, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    y[i] *= a.abs_at(i, i);
  }
  return y;
}

}  // namespace nektest

#endif  // NEK_TESTS_SUPPORT_HPP
