#ifndef NEK_IO_HPP
#define NEK_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "nek/matrix.hpp"

namespace nek {

enum class MatrixFormat {
  /// First token: the dimension n. Then n*n whitespace-separated scalars in
  /// row-major order. A complex scalar is written <real>(+|-)<real>i with no
  /// internal spaces, e.g. 3+4i or 1.5e-2-7i.
  Plain,
  /// Standard "%%MatrixMarket matrix (array|coordinate) (real|complex)
  /// general" files with square dimensions. Array data is column-major;
  /// coordinate entries not listed are zero.
  MatrixMarket,
};

/// Parses matrix text. Throws ParseError (with 1-based line/column) on
/// malformed tokens, non-square dimensions, non-finite values, duplicate
/// coordinate entries, trailing garbage, or empty input.
SquareMatrix parse_matrix(std::string_view text, MatrixFormat format);
SquareMatrix parse_matrix(std::istream& in, MatrixFormat format);

/// Loads a matrix file, sniffing the format: a leading "%%MatrixMarket"
/// banner selects MatrixMarket, anything else is Plain.
SquareMatrix load_matrix_file(const std::string& path);

/// Renders in Plain format with shortest round-trip number formatting;
/// parse_matrix(render_plain(A), Plain) reproduces A bit-exactly.
std::string render_plain(const SquareMatrix& a);

}  // namespace nek

#endif  // NEK_IO_HPP
