#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srank/exponent.hpp"

namespace srank {

/// Positioned input error. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line_, column_;
};

struct Relation {
  ExponentVector lhs, rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Generators plus relation pairs. Generator order fixes coordinate order.
struct MonoidPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  /// Notes produced while parsing, e.g. dropped trivial relations.
  std::vector<std::string> diagnostics;

  std::size_t rank() const { return generators.size(); }
  ExponentVector zero() const { return ExponentVector(rank()); }
  ExponentVector generator(std::size_t i) const { return ExponentVector::unit(rank(), i); }
  /// Index of a generator by identifier, or npos.
  std::size_t index_of(std::string_view id) const;
  /// Largest total degree of any relation side.
  std::uint64_t max_relation_degree() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Parsed Cayley table; only structural checks have been applied.
struct CayleyDocument {
  std::vector<std::string> labels;
  std::size_t zero = 0;
  std::vector<std::vector<std::size_t>> table;
};

/// Parse the `.cmon` presentation language:
///
///   gens a b;
///   rel 3 a = a + b;     # comment
///   rel 4*a = 2 b;
///
/// Relations whose two sides coincide are dropped with a diagnostic.
MonoidPresentation parse_presentation(std::string_view text, std::string name = {});

/// Parse `term (+ term)*` against the generators of `p`.
ExponentVector parse_element(std::string_view text, const MonoidPresentation& p);

/// Parse a `.ctab` JSON document {"elements": [...], "zero": label, "table": [[...]]}.
/// Table entries may be labels or integer indices.
CayleyDocument parse_cayley(std::string_view json_text);

std::string format_element(const ExponentVector& v, const std::vector<std::string>& generators);
std::string format_presentation(const MonoidPresentation& p);
std::string format_cayley(const CayleyDocument& doc);

}  // namespace srank
