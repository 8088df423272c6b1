#include "nek/errors.hpp"

#include <cstdarg>
#include <cstdio>

namespace nek {

namespace {

std::string format_message(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(format_message("parse error at %zu:%zu: %s", line, column,
                           message.c_str())),
      line_(line),
      column_(column) {}

ZeroDiagonal::ZeroDiagonal(std::size_t row)
    : Error(format_message("zero diagonal entry in row %zu", row + 1)),
      row_(row) {}

NotSdd::NotSdd() : Error("matrix is not strictly diagonally dominant") {}

NotNekrasov::NotNekrasov(std::optional<std::size_t> witness_row)
    : Error(witness_row
                ? format_message(
                      "matrix is not a Nekrasov matrix (row %zu violates "
                      "|a_ii| > h_i)",
                      *witness_row + 1)
                : std::string("matrix is not a Nekrasov matrix")),
      witness_(witness_row) {}

MuOutOfRange::MuOutOfRange(double mu, double threshold)
    : Error(format_message("mu = %.17g is not admissible; mu must exceed "
                           "r_1(A)/|a_11| = %.17g",
                           mu, threshold)),
      mu_(mu),
      threshold_(threshold) {}

DimensionTooSmall::DimensionTooSmall(const std::string& operation)
    : Error(operation + " requires a matrix of dimension at least 2") {}

SingularMatrix::SingularMatrix(std::size_t column)
    : Error(format_message("matrix is singular: pivot column %zu is zero",
                           column + 1)),
      column_(column) {}

EmptyGrid::EmptyGrid() : Error("no grid point exceeds r_1(A)/|a_11|") {}

}  // namespace nek
