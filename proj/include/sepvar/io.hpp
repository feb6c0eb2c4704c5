#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sepvar/ordering.hpp"
#include "sepvar/system.hpp"

namespace sepvar {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads a system file:
///
///   field Q | field F2 [boolean]
///   vars x1 x2 ... | vars x[1..n]
///   poly <expr>
///   ...
///
/// '#' starts a comment. Zero polynomials are dropped.
PolySystem parse_system(const std::string& text);

/// Parses one polynomial expression over `ring`. `line` is only used for
/// error positions.
Polynomial parse_polynomial(const std::string& expr, const RingPtr& ring, std::size_t line = 1);

/// Inverse of parse_system.
std::string format_system(const PolySystem& sys);

/// One row per line, whitespace-separated integers, n columns.
IntMatrix parse_integer_matrix(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace sepvar
