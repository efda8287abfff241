#include "srank/certificate.hpp"

namespace srank {

namespace {

constexpr std::pair<CertificateKind, const char*> kKindNames[] = {
    {CertificateKind::W12, "W12"},
    {CertificateKind::PurelyInf, "PurelyInf"},
    {CertificateKind::Refutation, "Refutation"},
    {CertificateKind::GradedSearch, "GradedSearch"},
    {CertificateKind::Counterexample, "Counterexample"},
    {CertificateKind::NonUnit, "NonUnit"},
};

}  // namespace

const char* to_string(CertificateKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<CertificateKind> certificate_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kKindNames)
    if (s == name) return kind;
  return std::nullopt;
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Holds:
      return "Holds";
    case VerdictKind::Fails:
      return "Fails";
    case VerdictKind::UnknownUpTo:
      return "UnknownUpTo";
  }
  return "?";
}

}  // namespace srank
