#pragma once

#include <string>

#include "srank/certificate.hpp"
#include "srank/rewrite.hpp"

namespace srank {

struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Re-checks certificates from scratch against one rewrite system. Shares
/// nothing with the search code beyond normal forms: homomorphisms are
/// re-validated against the defining relations, finite searches are redone
/// exhaustively, and graded searches re-enumerate their slices.
class Verifier {
 public:
  /// Re-checks confluence once; a non-confluent system rejects everything.
  explicit Verifier(const RewriteSystem& rs);

  VerifyResult check(const Certificate& c) const;

 private:
  const RewriteSystem& rs_;
  bool sound_;
};

VerifyResult verify_certificate(const RewriteSystem& rs, const Certificate& c);

}  // namespace srank
