#ifndef NEK_ERRORS_HPP
#define NEK_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace nek {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix input. Positions are 1-based, as in a text editor.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A computation divided by |a_ii| and hit a zero diagonal entry.
/// row() is 0-based; the message text numbers rows from 1.
class ZeroDiagonal : public Error {
public:
  explicit ZeroDiagonal(std::size_t row);
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

/// The matrix is not strictly diagonally dominant.
class NotSdd : public Error {
public:
  NotSdd();
};

/// The matrix fails the Nekrasov condition |a_ii| > h_i(A).
class NotNekrasov : public Error {
public:
  explicit NotNekrasov(std::optional<std::size_t> witness_row = std::nullopt);
  /// First violating row (0-based), when known.
  std::optional<std::size_t> witness_row() const noexcept { return witness_; }

private:
  std::optional<std::size_t> witness_;
};

/// The scaling parameter must satisfy mu > r_1(A)/|a_11| strictly.
class MuOutOfRange : public Error {
public:
  MuOutOfRange(double mu, double threshold);
  double mu() const noexcept { return mu_; }
  double threshold() const noexcept { return threshold_; }

private:
  double mu_;
  double threshold_;
};

/// Operation requires n >= 2.
class DimensionTooSmall : public Error {
public:
  explicit DimensionTooSmall(const std::string& operation);
};

/// Elimination found an exactly zero pivot column. column() is 0-based.
class SingularMatrix : public Error {
public:
  explicit SingularMatrix(std::size_t column);
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

/// A mu grid contained no admissible sample point.
class EmptyGrid : public Error {
public:
  EmptyGrid();
};

}  // namespace nek

#endif  // NEK_ERRORS_HPP
