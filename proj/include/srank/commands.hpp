#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "srank/report.hpp"

namespace srank {

// JSON-producing entry points shared by the command-line tool and the Python
// module. `text` is the content of a `.cmon` or `.ctab` input; tables are
// recognized by a leading '{'. Input problems surface as ParseError or
// std::invalid_argument.

bool is_table_input(const std::string& text);

Json cmd_nf(const std::string& text, const std::string& expr);
Json cmd_eq(const std::string& text, const std::string& lhs, const std::string& rhs);
Json cmd_complete(const std::string& text, std::size_t budget);
Json cmd_finite(const std::string& text, std::size_t cap);
Json cmd_grade(const std::string& text);

struct SrParams {
  std::uint64_t radius = 0;          // 0: default per-n radii
  std::uint64_t witness_radius = 0;  // 0: twice the radius
  std::size_t max_n = 24;
  std::size_t target_size = 6;
};

/// Brackets for sr and sr+ of one element, each certificate re-verified.
Json cmd_sr(const std::string& text, const std::string& expr, const SrParams& params);

/// Window properties for presentations, exact properties for finite inputs.
Json cmd_props(const std::string& text, std::uint64_t radius, std::uint64_t witness_radius);

struct QuotientRequest {
  /// oideal, max-antisymmetric, power-some, power-all, sr-plus
  std::string kind;
  /// oideal: generator x of <x> (label or expression).
  std::string ideal_of;
  std::vector<std::size_t> powers;
  /// sr-plus: label:bound pairs.
  std::vector<std::string> targets;
};

/// Finite inputs only; presentations are closed first.
Json cmd_quotient(const std::string& text, const QuotientRequest& request);

/// Re-checks a certificate against the presentation.
Json cmd_verify(const std::string& text, const Json& certificate);

}  // namespace srank
