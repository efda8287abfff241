#include "srank/commands.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "srank/harness.hpp"
#include "srank/kernel.hpp"
#include "srank/verify.hpp"

namespace srank {

namespace {

struct Loaded {
  MonoidPresentation p;
  RewriteSystem rs;
};

Loaded load_presentation(const std::string& text) {
  if (is_table_input(text))
    throw std::invalid_argument("this command needs a presentation, not a Cayley table");
  auto p = parse_presentation(text);
  auto rs = complete(p);
  if (!rs.confluent())
    throw std::invalid_argument("completion did not finish within the default budget");
  return {std::move(p), std::move(rs)};
}

/// The finite monoid named by the input, closing presentations first.
FiniteMonoid load_finite(const std::string& text) {
  if (is_table_input(text)) return validate(parse_cayley(text));
  auto in = load_presentation(text);
  auto fd = detect_finite(in.rs, 4096);
  if (!fd.closed()) throw std::invalid_argument("input is not a finite monoid (closure exceeded 4096 elements)");
  return *fd.monoid;
}

Elem find_label(const FiniteMonoid& m, const std::string& s) {
  if (auto e = m.find(s)) return *e;
  throw std::invalid_argument("unknown element '" + s + "'");
}

std::string rank_text(const std::optional<std::size_t>& r) { return r ? std::to_string(*r) : "inf"; }

Json flag_json(const FiniteMonoid& m, const Flag& f) {
  Json w = Json::array();
  for (Elem e : f.witness) w.push_back(m.label(e));
  return {{"value", f.value}, {"witness", w}};
}

Json labels_of(const FiniteMonoid& m, const std::vector<Elem>& xs) {
  Json j = Json::array();
  for (Elem x : xs) j.push_back(m.label(x));
  return j;
}

}  // namespace

bool is_table_input(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  return it != text.end() && *it == '{';
}

Json cmd_nf(const std::string& text, const std::string& expr) {
  auto in = load_presentation(text);
  const auto v = parse_element(expr, in.p);
  const auto nf = in.rs.normal_form(v);
  return {{"element", in.rs.format(v)}, {"normal_form", in.rs.format(nf)}, {"vector", to_json(nf)}};
}

Json cmd_eq(const std::string& text, const std::string& lhs, const std::string& rhs) {
  auto in = load_presentation(text);
  const auto u = in.rs.normal_form(parse_element(lhs, in.p));
  const auto v = in.rs.normal_form(parse_element(rhs, in.p));
  return {{"left", lhs},
          {"right", rhs},
          {"left_normal_form", in.rs.format(u)},
          {"right_normal_form", in.rs.format(v)},
          {"equal", u == v}};
}

Json cmd_complete(const std::string& text, std::size_t budget) {
  if (is_table_input(text)) throw std::invalid_argument("complete needs a presentation");
  const auto p = parse_presentation(text);
  const auto rs = complete(p, budget);
  Json rules = Json::array();
  for (const auto& r : rs.rules()) rules.push_back(rs.format(r.lhs) + " -> " + rs.format(r.rhs));
  return {{"generators", p.generators},
          {"confluent", rs.confluent()},
          {"insertions", rs.insertions()},
          {"budget", budget},
          {"rules", rules},
          {"diagnostics", p.diagnostics}};
}

Json cmd_finite(const std::string& text, std::size_t cap) {
  if (is_table_input(text)) {
    const auto m = validate(parse_cayley(text));
    return {{"finite", true}, {"size", m.size()}, {"table", to_json(m)}};
  }
  auto in = load_presentation(text);
  const auto fd = detect_finite(in.rs, cap);
  Json j = {{"cap", cap}};
  if (fd.closed()) {
    j["finite"] = true;
    j["size"] = fd.monoid->size();
    j["table"] = to_json(*fd.monoid);
  } else if (fd.infinite_by) {
    j["finite"] = false;
    j["grading"] = fd.infinite_by->weights;
  } else {
    j["finite"] = nullptr;
    j["note"] = "closure exceeded the cap";
  }
  return j;
}

Json cmd_grade(const std::string& text) {
  if (is_table_input(text)) throw std::invalid_argument("grade needs a presentation");
  const auto p = parse_presentation(text);
  const auto g = find_grading(p);
  if (!g) return {{"grading", nullptr}, {"strictly_positive", false}, {"support", 0}};
  return {{"grading", g->weights}, {"strictly_positive", g->strictly_positive()}, {"support", g->support()}};
}

Json cmd_sr(const std::string& text, const std::string& expr, const SrParams& params) {
  if (is_table_input(text)) {
    const auto m = validate(parse_cayley(text));
    const Elem a = find_label(m, expr);
    const auto r = sr_exact_finite(m, a);
    Json j = {{"element", expr},
              {"exact", true},
              {"sr", rank_text(r.value)},
              {"sr_plus", rank_text(sr_plus_exact_finite(m, a))},
              {"hermite", flag_json(m, r.hermite)},
              {"self_cancellative", flag_json(m, r.self_cancellative)}};
    if (r.collapse) j["collapse"] = {{"k", r.collapse->first}, {"z", m.label(r.collapse->second)}};
    return j;
  }
  auto in = load_presentation(text);
  RankOptions opt;
  opt.radius = params.radius;
  opt.witness_radius = params.witness_radius;
  opt.max_n = params.max_n;
  opt.target_size = params.target_size;
  Analyzer an(in.rs, opt);
  const auto a = in.rs.normal_form(parse_element(expr, in.p));
  const auto& gens = in.p.generators;
  Json j = {{"element", in.rs.format(a)},
            {"exact", false},
            {"sr", to_json(an.sr_bracket(a), gens)},
            {"sr_plus", to_json(an.sr_plus_bracket(a), gens)}};
  const Verifier verifier(in.rs);
  std::size_t checked = 0, rejected = 0;
  for (const auto& c : collect_certificates(j)) {
    ++checked;
    rejected += !verifier.check(certificate_from_json(c));
  }
  j["verification"] = {{"checked", checked}, {"rejected", rejected}};
  return j;
}

Json cmd_props(const std::string& text, std::uint64_t radius, std::uint64_t witness_radius) {
  if (is_table_input(text)) {
    const auto m = validate(parse_cayley(text));
    const auto r = property_report(m);
    const auto s = structure_report(m);
    Json j = {{"exact", true}, {"units", labels_of(m, r.units)}, {"irreducibles", labels_of(m, r.irreducibles)}};
    j["properties"] = {{"conical", flag_json(m, r.conical)},
                       {"stably_finite", flag_json(m, r.stably_finite)},
                       {"separative", flag_json(m, r.separative)},
                       {"strongly_separative", flag_json(m, r.strongly_separative)},
                       {"refinement", flag_json(m, r.refinement)},
                       {"cancellative", flag_json(m, r.cancellative)},
                       {"simple", s.simple}};
    j["components"] = Json::array();
    for (const auto& c : s.components) j["components"].push_back(labels_of(m, c));
    j["o_ideals"] = Json::array();
    for (const auto& c : s.o_ideals) j["o_ideals"].push_back(labels_of(m, c));
    return j;
  }
  auto in = load_presentation(text);
  Analyzer an(in.rs);
  const auto& gens = in.p.generators;
  if (!radius) radius = 4 * (in.p.max_relation_degree() + 1);
  if (!witness_radius) witness_radius = 2 * radius;
  if (witness_radius < radius) throw std::invalid_argument("witness radius must be at least the radius");
  const auto wr = an.window_property_report(radius, witness_radius);
  Json j = {{"exact", false}, {"radius", radius}, {"witness_radius", witness_radius}};
  j["properties"] = {{"conical", to_json(wr.conical, gens)},
                     {"stably_finite", to_json(wr.stably_finite, gens)},
                     {"separative", to_json(wr.separative, gens)},
                     {"strongly_separative", to_json(wr.strongly_separative, gens)},
                     {"refinement", to_json(wr.refinement, gens)},
                     {"simplicity", to_json(wr.simplicity, gens)}};
  j["components"] = Json::array();
  for (const auto& cls : wr.components) {
    Json c = Json::array();
    for (const auto& v : cls) c.push_back(in.rs.format(v));
    j["components"].push_back(c);
  }
  if (auto units = unit_group(an)) {
    Json u = Json::array();
    for (const auto& v : *units) u.push_back(in.rs.format(v));
    j["units"] = u;
  } else {
    j["units"] = nullptr;
  }
  return j;
}

Json cmd_quotient(const std::string& text, const QuotientRequest& req) {
  const auto m = load_finite(text);
  Json params = {{"kind", req.kind}};
  Quotient q = [&] {
    if (req.kind == "oideal") {
      if (req.ideal_of.empty()) throw std::invalid_argument("oideal needs --ideal-of");
      const Elem x = find_label(m, req.ideal_of);
      const auto mask = o_ideal_of(m, x);
      QuotientParams qp;
      for (Elem y = 0; y < m.size(); ++y)
        if (mask[y]) qp.ideal.push_back(y);
      params["ideal"] = labels_of(m, qp.ideal);
      return quotient(m, QuotientKind::OIdeal, qp);
    }
    if (req.kind == "max-antisymmetric") return quotient(m, QuotientKind::MaxAntisymmetric, {});
    if (req.kind == "power-some" || req.kind == "power-all") {
      params["powers"] = req.powers;
      return quotient(m, req.kind == "power-some" ? QuotientKind::PowerSome : QuotientKind::PowerAll,
                      {{}, req.powers});
    }
    if (req.kind == "sr-plus") {
      std::vector<SrPlusTarget> targets;
      for (const auto& t : req.targets) {
        const auto colon = t.rfind(':');
        if (colon == std::string::npos) throw std::invalid_argument("target must be LABEL:BOUND");
        const auto bound = std::stoul(t.substr(colon + 1));
        if (bound < 1) throw std::invalid_argument("bound must be at least 1");
        targets.push_back({find_label(m, t.substr(0, colon)), bound});
      }
      if (targets.empty()) throw std::invalid_argument("sr-plus needs at least one --target");
      params["targets"] = req.targets;
      return quotient_by(m, smallest_sr_plus_congruence(m, targets));
    }
    throw std::invalid_argument("unknown quotient kind '" + req.kind + "'");
  }();
  Json classes = Json::array();
  for (const auto& c : q.congruence.classes()) classes.push_back(labels_of(m, c));
  Json projection = Json::object();
  for (Elem x = 0; x < m.size(); ++x) projection[m.label(x)] = q.monoid.label(q.projection[x]);
  return {{"params", params},
          {"source_size", m.size()},
          {"classes", classes},
          {"projection", projection},
          {"quotient", to_json(q.monoid)},
          {"kernel_matches_relation", q.kernel_matches_relation},
          {"relation_idempotent", q.relation_idempotent}};
}

Json cmd_verify(const std::string& text, const Json& certificate) {
  auto in = load_presentation(text);
  const auto r = verify_certificate(in.rs, certificate_from_json(certificate));
  return {{"ok", r.ok}, {"reason", r.reason}};
}

}  // namespace srank
