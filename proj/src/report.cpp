#include "srank/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace srank {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const ExponentVector& v) { return Json(v.raw()); }

ExponentVector exponent_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be a coefficient list");
  std::vector<Coeff> c;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw std::invalid_argument("coefficients must be nonnegative integers");
    c.push_back(x.get<Coeff>());
  }
  return ExponentVector(std::move(c));
}

Json to_json(const FiniteMonoid& m) {
  const auto doc = m.document();
  return {{"elements", doc.labels}, {"zero", doc.zero}, {"table", doc.table}};
}

FiniteMonoid finite_from_json(const Json& j) {
  CayleyDocument doc;
  doc.labels = j.at("elements").get<std::vector<std::string>>();
  doc.zero = j.at("zero").get<std::size_t>();
  doc.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  return validate(doc);
}

Json to_json(const Certificate& c, const std::vector<std::string>& generators) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["property"] = c.property;
  j["elements"] = Json::object();
  for (const auto& [name, v] : c.elements) j["elements"][name] = to_json(v);
  if (!generators.empty()) {
    j["text"] = Json::object();
    for (const auto& [name, v] : c.elements) j["text"][name] = format_element(v, generators);
  }
  j["params"] = Json::object();
  for (const auto& [k, v] : c.params) j["params"][k] = v;
  if (c.hom) {
    j["hom"] = {{"target_name", c.hom->target_name},
                {"target", to_json(c.hom->target)},
                {"assignment", c.hom->assignment}};
  }
  if (c.grading) j["grading"] = c.grading->weights;
  j["claims"] = c.claims;
  j["support"] = Json::array();
  for (const auto& s : c.support) j["support"].push_back(to_json(s, generators));
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  const auto kind = certificate_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown certificate kind");
  c.kind = *kind;
  c.property = j.at("property").get<std::string>();
  for (const auto& [name, v] : j.at("elements").items()) c.elements[name] = exponent_from_json(v);
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) c.params[k] = v.get<std::int64_t>();
  if (j.contains("hom")) {
    const auto& h = j.at("hom");
    c.hom = HomData{h.at("target_name").get<std::string>(), finite_from_json(h.at("target")),
                    h.at("assignment").get<std::vector<Elem>>()};
  }
  if (j.contains("grading")) c.grading = Grading{j.at("grading").get<std::vector<std::uint64_t>>()};
  if (j.contains("claims")) c.claims = j.at("claims").get<std::vector<std::string>>();
  if (j.contains("support"))
    for (const auto& s : j.at("support")) c.support.push_back(certificate_from_json(s));
  return c;
}

Json to_json(const Verdict& v, const std::vector<std::string>& generators) {
  Json j = {{"verdict", to_string(v.kind)},
            {"basis", v.basis},
            {"radius", v.radius},
            {"witness_radius", v.witness_radius},
            {"candidate_failure", v.candidate_failure},
            {"graded", v.graded}};
  j["witness"] = Json::array();
  for (const auto& w : v.witness) j["witness"].push_back(to_json(w));
  if (!generators.empty() && !v.witness.empty()) {
    j["witness_text"] = Json::array();
    for (const auto& w : v.witness) j["witness_text"].push_back(format_element(w, generators));
  }
  if (v.certificate) j["certificate"] = to_json(*v.certificate, generators);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const SrBracket& b, const std::vector<std::string>& generators) {
  Json j;
  j["certified_lo"] = b.certified_lo;
  j["chain"] = Json::array();
  for (const auto& c : b.chain) j["chain"].push_back(to_json(c, generators));
  j["infinite"] = b.infinite ? to_json(*b.infinite, generators) : Json(nullptr);
  if (b.empirical_hi)
    j["empirical_hi"] = {{"n", b.empirical_hi->n},
                         {"radius", b.empirical_hi->radius},
                         {"exhaustive", b.empirical_hi->exhaustive}};
  else
    j["empirical_hi"] = nullptr;
  j["consistent"] = b.consistent();
  j["pinned"] = b.pinned();
  if (b.pinned()) {
    if (auto v = b.value())
      j["value"] = *v;
    else
      j["value"] = "inf";
  } else {
    j["value"] = nullptr;
  }
  return j;
}

namespace {

void collect(const Json& j, std::vector<Json>& out) {
  if (j.is_object()) {
    if (j.contains("kind") && j.contains("property") && j.contains("elements")) {
      out.push_back(j);
      return;  // support certificates are checked through their parent
    }
    for (const auto& [_, v] : j.items()) collect(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect(v, out);
  }
}

}  // namespace

std::vector<Json> collect_certificates(const Json& j) {
  std::vector<Json> out;
  collect(j, out);
  return out;
}

Json make_report(const std::string& command, std::string_view input, Json params, Json results,
                 double elapsed_ms) {
  return {{"version", kToolVersion},
          {"schema_version", kReportSchemaVersion},
          {"input_digest", "fnv1a64:" + fnv1a_hex(input)},
          {"command", command},
          {"params", std::move(params)},
          {"results", std::move(results)},
          {"timing", {{"elapsed_ms", elapsed_ms}}}};
}

}  // namespace srank
