#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "srank/certificate.hpp"
#include "srank/finite.hpp"
#include "srank/rank.hpp"

namespace srank {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::json;

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Generator-coefficient list.
Json to_json(const ExponentVector& v);
ExponentVector exponent_from_json(const Json& j);

Json to_json(const FiniteMonoid& m);
/// Re-validates every monoid axiom.
FiniteMonoid finite_from_json(const Json& j);

/// `generators` only adds readable `text` fields; decoding ignores them.
Json to_json(const Certificate& c, const std::vector<std::string>& generators = {});
Certificate certificate_from_json(const Json& j);

Json to_json(const Verdict& v, const std::vector<std::string>& generators = {});
Json to_json(const SrBracket& b, const std::vector<std::string>& generators = {});

/// Collects every certificate reachable from a report fragment (any object
/// with a "kind" and a "property" is one), outermost first.
std::vector<Json> collect_certificates(const Json& j);

/// Envelope {version, schema_version, input_digest, command, params, results, timing}.
Json make_report(const std::string& command, std::string_view input, Json params, Json results,
                 double elapsed_ms);

}  // namespace srank
