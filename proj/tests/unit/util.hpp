#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "srank/presentation.hpp"
#include "srank/rewrite.hpp"

namespace testutil {

struct Loaded {
  srank::MonoidPresentation p;
  srank::RewriteSystem rs;

  srank::ExponentVector operator()(const std::string& expr) const {
    return rs.normal_form(srank::parse_element(expr, p));
  }
};

inline Loaded load(const std::string& text) {
  auto p = srank::parse_presentation(text);
  auto rs = srank::complete(p);
  return {std::move(p), std::move(rs)};
}

inline std::string read_source(const std::string& rel) {
  std::ifstream in(std::string(SRANK_SOURCE_DIR) + "/" + rel, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Every vector of N^k with total degree <= d.
inline std::vector<srank::ExponentVector> all_vectors(std::size_t k, srank::Coeff d) {
  std::vector<srank::ExponentVector> out;
  srank::ExponentVector v(k);
  auto rec = [&](auto&& self, std::size_t i, srank::Coeff left) -> void {
    if (i == k) {
      out.push_back(v);
      return;
    }
    for (srank::Coeff c = 0; c <= left; ++c) {
      v[i] = c;
      self(self, i + 1, left - c);
    }
    v[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

inline const char* kTwoRel3 = "gens a b; rel 3 a = a + b; rel 4 a = 2 b;";
inline const char* kTwoRel5 = "gens a b; rel 5 a = a + b; rel 8 a = 2 b;";
inline const char* kAbsorb = "gens a b; rel a + b = a;";
inline const char* kThreeA = "gens a; rel 3 a = a;";
inline const char* kInfinity = "gens g w; rel g + w = w; rel 2 w = w;";
inline const char* kFourNine = "gens a b; rel 4 a = 2 a + b; rel 2 a + b = 2 b;";

inline const char* kThreeATable = R"({"elements": ["0", "a", "2a"], "zero": "0",
  "table": [["0", "a", "2a"], ["a", "2a", "a"], ["2a", "a", "2a"]]})";

}  // namespace testutil
