#include "nek/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "nek/errors.hpp"

namespace nek {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t col;
};

// Whitespace tokenizer with 1-based line/column tracking. In comment mode,
// '%' where a token would start skips the rest of the line.
class Scanner {
public:
  Scanner(std::string_view text, bool allow_comments, std::size_t start_line)
      : text_(text), allow_comments_(allow_comments), line_(start_line) {}

  std::optional<Token> next() {
    skip_blanks();
    if (pos_ >= text_.size()) {
      return std::nullopt;
    }
    const std::size_t start = pos_;
    const std::size_t line = line_;
    const std::size_t col = col_;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    return Token{text_.substr(start, pos_ - start), line, col};
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return col_; }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blanks() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      if (allow_comments_ && pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          advance();
        }
        continue;
      }
      return;
    }
  }

  std::string_view text_;
  bool allow_comments_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

enum class ScanStatus { Ok, NoMatch, OutOfRange };

// Reads a double with optional leading sign from the front of s.
ScanStatus scan_double(std::string_view s, double& out, std::size_t& consumed) {
  consumed = 0;
  if (s.empty()) {
    return ScanStatus::NoMatch;
  }
  std::size_t off = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    off = 1;
  }
  double value = 0.0;
  const auto result =
      std::from_chars(s.data() + off, s.data() + s.size(), value);
  if (result.ptr == s.data() + off) {
    return ScanStatus::NoMatch;
  }
  consumed = static_cast<std::size_t>(result.ptr - s.data());
  if (result.ec == std::errc::result_out_of_range) {
    return ScanStatus::OutOfRange;
  }
  out = negative ? -value : value;
  return ScanStatus::Ok;
}

[[noreturn]] void fail(const Token& tok, const std::string& message) {
  throw ParseError(tok.line, tok.col, message);
}

std::string quoted(std::string_view s) {
  return "'" + std::string(s) + "'";
}

double parse_real_token(const Token& tok) {
  double value = 0.0;
  std::size_t consumed = 0;
  const ScanStatus status = scan_double(tok.text, value, consumed);
  if (status == ScanStatus::OutOfRange) {
    fail(tok, "value out of range " + quoted(tok.text));
  }
  if (status != ScanStatus::Ok || consumed != tok.text.size()) {
    fail(tok, "malformed number " + quoted(tok.text));
  }
  if (!std::isfinite(value)) {
    fail(tok, "non-finite value " + quoted(tok.text));
  }
  return value;
}

// A scalar token is either a plain real or <real>(+|-)<real>i.
Scalar parse_scalar_token(const Token& tok) {
  const std::string_view s = tok.text;
  double re = 0.0;
  std::size_t c1 = 0;
  const ScanStatus first = scan_double(s, re, c1);
  if (first == ScanStatus::OutOfRange) {
    fail(tok, "value out of range " + quoted(s));
  }
  if (first != ScanStatus::Ok) {
    fail(tok, "malformed scalar " + quoted(s));
  }
  if (c1 == s.size()) {
    if (!std::isfinite(re)) {
      fail(tok, "non-finite value " + quoted(s));
    }
    return Scalar(re);
  }
  if (s[c1] != '+' && s[c1] != '-') {
    fail(tok, "malformed scalar " + quoted(s));
  }
  double im = 0.0;
  std::size_t c2 = 0;
  const ScanStatus second = scan_double(s.substr(c1), im, c2);
  if (second == ScanStatus::OutOfRange) {
    fail(tok, "value out of range " + quoted(s));
  }
  if (second != ScanStatus::Ok || c1 + c2 + 1 != s.size() ||
      s[c1 + c2] != 'i') {
    fail(tok, "malformed scalar " + quoted(s));
  }
  if (!std::isfinite(re) || !std::isfinite(im)) {
    fail(tok, "non-finite value " + quoted(s));
  }
  return Scalar(re, im);
}

std::size_t parse_dimension_token(const Token& tok, const char* what) {
  unsigned long long value = 0;
  const auto result = std::from_chars(
      tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (result.ec != std::errc{} ||
      result.ptr != tok.text.data() + tok.text.size()) {
    fail(tok, std::string("malformed ") + what + " " + quoted(tok.text));
  }
  if (value == 0) {
    fail(tok, std::string(what) + " must be at least 1");
  }
  if (value > 1000000ULL) {
    fail(tok, std::string(what) + " is unreasonably large");
  }
  return static_cast<std::size_t>(value);
}

Token expect_token(Scanner& sc, const char* what) {
  if (auto tok = sc.next()) {
    return *tok;
  }
  throw ParseError(sc.line(), sc.column(),
                   std::string("unexpected end of input: expected ") + what);
}

void expect_end(Scanner& sc) {
  if (auto tok = sc.next()) {
    fail(*tok, "trailing data after matrix entries");
  }
}

SquareMatrix parse_plain(std::string_view text) {
  Scanner sc(text, false, 1);
  auto first = sc.next();
  if (!first) {
    throw ParseError(1, 1, "empty input");
  }
  const std::size_t n = parse_dimension_token(*first, "matrix dimension");
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    entries.push_back(parse_scalar_token(expect_token(sc, "a matrix entry")));
  }
  expect_end(sc);
  return SquareMatrix(n, std::move(entries));
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

struct MmHeader {
  bool coordinate = false;
  bool complex_field = false;
};

MmHeader parse_mm_banner(std::string_view banner_line) {
  Scanner sc(banner_line, false, 1);
  const Token id = expect_token(sc, "%%MatrixMarket banner");
  if (!iequals(id.text, "%%MatrixMarket")) {
    fail(id, "missing %%MatrixMarket banner");
  }
  const Token object = expect_token(sc, "banner object");
  if (!iequals(object.text, "matrix")) {
    fail(object, "unsupported object " + quoted(object.text) +
                     " (only 'matrix' is accepted)");
  }
  MmHeader header;
  const Token format = expect_token(sc, "banner format");
  if (iequals(format.text, "coordinate")) {
    header.coordinate = true;
  } else if (!iequals(format.text, "array")) {
    fail(format, "unsupported format " + quoted(format.text) +
                     " (expected 'array' or 'coordinate')");
  }
  const Token field = expect_token(sc, "banner field");
  if (iequals(field.text, "complex")) {
    header.complex_field = true;
  } else if (!iequals(field.text, "real")) {
    fail(field, "unsupported field " + quoted(field.text) +
                    " (expected 'real' or 'complex')");
  }
  const Token symmetry = expect_token(sc, "banner symmetry");
  if (!iequals(symmetry.text, "general")) {
    fail(symmetry, "unsupported symmetry " + quoted(symmetry.text) +
                       " (only 'general' is accepted)");
  }
  expect_end(sc);
  return header;
}

Scalar parse_mm_value(Scanner& sc, bool complex_field) {
  const Token re = expect_token(sc, "a matrix value");
  if (!complex_field) {
    return Scalar(parse_real_token(re));
  }
  const Token im = expect_token(sc, "the imaginary part of a value");
  return Scalar(parse_real_token(re), parse_real_token(im));
}

SquareMatrix parse_matrix_market(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError(1, 1, "empty input");
  }
  const std::size_t eol = text.find('\n');
  const std::string_view banner =
      (eol == std::string_view::npos) ? text : text.substr(0, eol);
  const MmHeader header = parse_mm_banner(banner);

  const std::string_view body =
      (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
  Scanner sc(body, true, 2);

  const Token rows_tok = expect_token(sc, "the row count");
  const Token cols_tok = expect_token(sc, "the column count");
  const std::size_t rows = parse_dimension_token(rows_tok, "row count");
  const std::size_t cols = parse_dimension_token(cols_tok, "column count");
  if (rows != cols) {
    fail(rows_tok, "matrix must be square");
  }
  const std::size_t n = rows;

  std::vector<Scalar> entries(n * n, Scalar(0.0));
  if (!header.coordinate) {
    // Array data is column-major.
    for (std::size_t k = 0; k < n * n; ++k) {
      const std::size_t col = k / n;
      const std::size_t row = k % n;
      entries[row * n + col] = parse_mm_value(sc, header.complex_field);
    }
  } else {
    const Token nnz_tok = expect_token(sc, "the entry count");
    unsigned long long nnz = 0;
    {
      const auto result = std::from_chars(
          nnz_tok.text.data(), nnz_tok.text.data() + nnz_tok.text.size(), nnz);
      if (result.ec != std::errc{} ||
          result.ptr != nnz_tok.text.data() + nnz_tok.text.size()) {
        fail(nnz_tok, "malformed entry count " + quoted(nnz_tok.text));
      }
    }
    if (nnz > static_cast<unsigned long long>(n) * n) {
      fail(nnz_tok, "entry count exceeds matrix size");
    }
    std::vector<bool> seen(n * n, false);
    for (unsigned long long k = 0; k < nnz; ++k) {
      const Token i_tok = expect_token(sc, "a row index");
      const Token j_tok = expect_token(sc, "a column index");
      const std::size_t i = parse_dimension_token(i_tok, "row index");
      const std::size_t j = parse_dimension_token(j_tok, "column index");
      if (i > n) {
        fail(i_tok, "row index out of range");
      }
      if (j > n) {
        fail(j_tok, "column index out of range");
      }
      const std::size_t idx = (i - 1) * n + (j - 1);
      if (seen[idx]) {
        fail(i_tok, "duplicate entry");
      }
      seen[idx] = true;
      entries[idx] = parse_mm_value(sc, header.complex_field);
    }
  }
  expect_end(sc);
  return SquareMatrix(n, std::move(entries));
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, result.ptr);
}

void append_scalar(std::string& out, const Scalar& v) {
  append_double(out, v.real());
  if (v.imag() != 0.0) {
    out.push_back(std::signbit(v.imag()) ? '-' : '+');
    append_double(out, std::abs(v.imag()));
    out.push_back('i');
  }
}

}  // namespace

SquareMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Plain ? parse_plain(text)
                                       : parse_matrix_market(text);
}

SquareMatrix parse_matrix(std::istream& in, MatrixFormat format) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(std::string_view(buffer.str()), format);
}

SquareMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const MatrixFormat format = text.rfind("%%", 0) == 0
                                  ? MatrixFormat::MatrixMarket
                                  : MatrixFormat::Plain;
  return parse_matrix(std::string_view(text), format);
}

std::string render_plain(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  std::string out = std::to_string(n);
  out.push_back('\n');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) {
        out.push_back(' ');
      }
      append_scalar(out, a(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace nek
