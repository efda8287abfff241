// srank: command-line front end for the stable rank workbench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "srank/commands.hpp"
#include "srank/harness.hpp"

namespace {

using srank::Json;

enum Exit { kOk = 0, kAssertFailed = 1, kInputError = 2, kNoVerdict = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bracket_text(const Json& b) {
  std::ostringstream os;
  if (!b["infinite"].is_null()) {
    os << "inf (certified: " << b["infinite"]["kind"].get<std::string>() << ")";
    return os.str();
  }
  os << "certified >= " << b["certified_lo"];
  if (!b["chain"].empty()) {
    os << " [";
    for (std::size_t i = 0; i < b["chain"].size(); ++i)
      os << (i ? " " : "") << b["chain"][i]["kind"].get<std::string>();
    os << "]";
  }
  if (b["empirical_hi"].is_null())
    os << ", no clean window";
  else
    os << ", clean at n = " << b["empirical_hi"]["n"] << " on radius " << b["empirical_hi"]["radius"]
       << (b["empirical_hi"]["exhaustive"].get<bool>() ? " (exhaustive)" : "");
  if (b["pinned"].get<bool>()) os << "  => " << (b["value"].is_string() ? b["value"].get<std::string>() : b["value"].dump());
  return os.str();
}

std::string verdict_text(const Json& v) {
  std::string s = v["verdict"].get<std::string>() + " (" + v["basis"].get<std::string>();
  if (v["verdict"] == "UnknownUpTo") s += ", radius " + v["radius"].dump();
  s += ")";
  if (v.contains("certificate")) {
    s += " via " + v["certificate"]["kind"].get<std::string>();
    for (const auto& c : v["certificate"]["claims"]) s += "; " + c.get<std::string>();
  }
  return s;
}

struct Output {
  bool json = false;
  std::string command;
  std::string input;
  Json params = Json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const Json& results, const std::string& text) const {
    if (json) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cout << srank::make_report(command, input, params, results, ms).dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable rank workbench for finitely presented and finite commutative monoids"};
  app.require_subcommand(1);

  Output out;
  std::string file;
  std::vector<std::string> exprs;
  std::size_t budget = srank::kDefaultCompletionBudget, cap = 4096;
  srank::SrParams sp;
  std::uint64_t radius = 0, witness_radius = 0;
  bool require_verdict = false, assert_equal = false;
  std::vector<std::string> assert_props;
  std::optional<std::size_t> assert_le;
  srank::QuotientRequest qr;
  std::string powers;
  std::vector<std::string> fixtures;
  std::size_t samples = 100;
  std::uint64_t seed = srank::SuiteOptions{}.seed;
  std::string certificate_file;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", out.json, "Emit a JSON report"); };
  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Presentation (.cmon) or Cayley table (.ctab)")->required(); };

  auto* nf = app.add_subcommand("nf", "Normal form of an element");
  add_file(nf);
  nf->add_option("-e,--expr", exprs, "Element expression")->required()->expected(1);
  add_json(nf);

  auto* eq = app.add_subcommand("eq", "Decide equality of two elements");
  add_file(eq);
  eq->add_option("-e,--expr", exprs, "Element expressions (twice)")->required()->expected(2);
  eq->add_flag("--assert", assert_equal, "Exit 1 unless the elements are equal");
  add_json(eq);

  auto* comp = app.add_subcommand("complete", "Complete the presentation to a rewrite system");
  add_file(comp);
  comp->add_option("--budget", budget, "Rule insertion budget")->check(CLI::PositiveNumber);
  add_json(comp);

  auto* fin = app.add_subcommand("finite", "Decide finiteness and print the Cayley table");
  add_file(fin);
  fin->add_option("--cap", cap, "Largest closure explored")->check(CLI::PositiveNumber);
  add_json(fin);

  auto* grade = app.add_subcommand("grade", "Find a grading of largest support");
  add_file(grade);
  add_json(grade);

  auto* sr = app.add_subcommand("sr", "Stable rank and strong stable rank brackets");
  add_file(sr);
  sr->add_option("-e,--expr", exprs, "Element expression")->required()->expected(1);
  sr->add_option("--radius", sp.radius, "Uniform search radius (default 4(d+n))");
  sr->add_option("--witness-radius", sp.witness_radius, "Witness radius (default twice the radius)");
  sr->add_option("--max-n", sp.max_n, "Largest n tried")->check(CLI::PositiveNumber);
  sr->add_option("--target-size", sp.target_size, "Largest built-in refutation target");
  sr->add_option("--assert-le", assert_le, "Exit 1 if sr is certified above this value");
  sr->add_flag("--require-verdict", require_verdict, "Exit 3 unless the sr bracket is pinned");
  add_json(sr);

  auto* props = app.add_subcommand("props", "Monoid-wide properties");
  add_file(props);
  props->add_option("--radius", radius, "Window radius");
  props->add_option("--witness-radius", witness_radius, "Witness radius");
  props->add_option("--assert", assert_props, "Exit 1 if this property is certified false");
  props->add_flag("--require-verdict", require_verdict, "Exit 3 if an asserted property is undecided");
  add_json(props);

  auto* quot = app.add_subcommand("quotient", "Quotients of finite monoids");
  add_file(quot);
  quot->add_option("--kind", qr.kind, "oideal | max-antisymmetric | power-some | power-all | sr-plus")
      ->required()
      ->check(CLI::IsMember({"oideal", "max-antisymmetric", "power-some", "power-all", "sr-plus"}));
  quot->add_option("--ideal-of", qr.ideal_of, "Element x whose o-ideal <x> is collapsed");
  quot->add_option("--powers", powers, "Comma-separated set S");
  quot->add_option("--target", qr.targets, "LABEL:BOUND for sr-plus");
  add_json(quot);

  auto* suite = app.add_subcommand("suite", "Run the fixture suite");
  suite->add_option("--fixture", fixtures, "Fixture id (repeatable)");
  suite->add_option("--samples", samples, "Random finite monoids for the exact laws");
  suite->add_option("--seed", seed, "Seed for the law sample");
  suite->add_flag("--require-verdict", require_verdict, "Exit 3 if some fact is not pinned");
  add_json(suite);

  auto* ver = app.add_subcommand("verify", "Re-check a certificate against a presentation");
  add_file(ver);
  ver->add_option("--certificate", certificate_file, "Certificate JSON")->required();
  add_json(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    auto* cmd = app.get_subcommands().front();
    out.command = cmd->get_name();
    if (!file.empty()) out.input = read_file(file);
    std::ostringstream text;
    int rc = kOk;

    if (cmd == nf) {
      out.params = {{"expr", exprs[0]}};
      const auto r = srank::cmd_nf(out.input, exprs[0]);
      text << r["normal_form"].get<std::string>() << "\n";
      out.emit(r, text.str());
    } else if (cmd == eq) {
      out.params = {{"exprs", exprs}};
      const auto r = srank::cmd_eq(out.input, exprs[0], exprs[1]);
      text << (r["equal"].get<bool>() ? "equal" : "not equal") << " ("
           << r["left_normal_form"].get<std::string>() << " vs "
           << r["right_normal_form"].get<std::string>() << ")\n";
      out.emit(r, text.str());
      if (assert_equal && !r["equal"].get<bool>()) rc = kAssertFailed;
    } else if (cmd == comp) {
      out.params = {{"budget", budget}};
      const auto r = srank::cmd_complete(out.input, budget);
      text << (r["confluent"].get<bool>() ? "confluent" : "budget exhausted, not confluent") << ", "
           << r["rules"].size() << " rules\n";
      for (const auto& rule : r["rules"]) text << "  " << rule.get<std::string>() << "\n";
      out.emit(r, text.str());
      if (!r["confluent"].get<bool>() && require_verdict) rc = kNoVerdict;
    } else if (cmd == fin) {
      out.params = {{"cap", cap}};
      const auto r = srank::cmd_finite(out.input, cap);
      if (r["finite"].is_null()) {
        text << "undetermined: closure exceeded " << cap << " elements\n";
      } else if (!r["finite"].get<bool>()) {
        text << "infinite: grading " << r["grading"].dump() << "\n";
      } else {
        text << "finite, " << r["size"] << " elements\n";
        const auto& t = r["table"];
        for (std::size_t x = 0; x < t["elements"].size(); ++x) {
          text << "  " << t["elements"][x].get<std::string>() << ":";
          for (const auto& y : t["table"][x]) text << " " << t["elements"][y.get<std::size_t>()].get<std::string>();
          text << "\n";
        }
      }
      out.emit(r, text.str());
    } else if (cmd == grade) {
      const auto r = srank::cmd_grade(out.input);
      if (r["grading"].is_null())
        text << "no nonzero grading\n";
      else
        text << "weights " << r["grading"].dump()
             << (r["strictly_positive"].get<bool>() ? " (strictly positive)\n" : "\n");
      out.emit(r, text.str());
    } else if (cmd == sr) {
      out.params = {{"expr", exprs[0]},
                    {"radius", sp.radius},
                    {"witness_radius", sp.witness_radius},
                    {"max_n", sp.max_n},
                    {"target_size", sp.target_size}};
      const auto r = srank::cmd_sr(out.input, exprs[0], sp);
      const bool exact = r["exact"].get<bool>();
      if (exact) {
        text << "sr(" << r["element"].get<std::string>() << ") = " << r["sr"].get<std::string>()
             << " (exact)\n";
        text << "sr+(" << r["element"].get<std::string>() << ") = " << r["sr_plus"].get<std::string>()
             << " (exact)\n";
      } else {
        text << "sr(" << r["element"].get<std::string>() << "): " << bracket_text(r["sr"]) << "\n";
        text << "sr+(" << r["element"].get<std::string>() << "): " << bracket_text(r["sr_plus"]) << "\n";
        text << "certificates re-verified: " << r["verification"]["checked"] << ", rejected "
             << r["verification"]["rejected"] << "\n";
      }
      out.emit(r, text.str());
      if (!exact) {
        const auto& b = r["sr"];
        if (assert_le && (!b["infinite"].is_null() || b["certified_lo"].get<std::size_t>() > *assert_le))
          rc = kAssertFailed;
        else if (require_verdict && !b["pinned"].get<bool>())
          rc = kNoVerdict;
      } else if (assert_le && (r["sr"] == "inf" || std::stoul(r["sr"].get<std::string>()) > *assert_le)) {
        rc = kAssertFailed;
      }
    } else if (cmd == props) {
      out.params = {{"radius", radius}, {"witness_radius", witness_radius}, {"assert", assert_props}};
      const auto r = srank::cmd_props(out.input, radius, witness_radius);
      const bool exact = r["exact"].get<bool>();
      for (const auto& [name, v] : r["properties"].items()) {
        text << name << ": ";
        if (exact) {
          const bool val = v.is_boolean() ? v.get<bool>() : v["value"].get<bool>();
          text << (val ? "holds" : "fails");
          if (!v.is_boolean() && !v["witness"].empty()) text << " " << v["witness"].dump();
          text << " (exact)\n";
        } else {
          text << verdict_text(v) << "\n";
        }
      }
      if (!r["units"].is_null()) text << "units: " << r["units"].dump() << "\n";
      out.emit(r, text.str());
      for (const auto& p : assert_props) {
        if (!r["properties"].contains(p)) throw InputError("unknown property '" + p + "'");
        const auto& v = r["properties"][p];
        if (exact) {
          const bool val = v.is_boolean() ? v.get<bool>() : v["value"].get<bool>();
          if (!val) rc = kAssertFailed;
        } else if (v["verdict"] == "Fails") {
          rc = kAssertFailed;
        } else if (v["verdict"] == "UnknownUpTo" && require_verdict && rc == kOk) {
          rc = kNoVerdict;
        }
      }
    } else if (cmd == quot) {
      std::stringstream ps(powers);
      for (std::string tok; std::getline(ps, tok, ',');)
        if (!tok.empty()) qr.powers.push_back(std::stoul(tok));
      out.params = {{"kind", qr.kind}, {"ideal_of", qr.ideal_of}, {"powers", qr.powers}, {"targets", qr.targets}};
      const auto r = srank::cmd_quotient(out.input, qr);
      text << qr.kind << " quotient: " << r["source_size"] << " -> " << r["quotient"]["elements"].size()
           << " elements\nclasses:";
      for (const auto& c : r["classes"]) text << " " << c.dump();
      text << "\n";
      out.emit(r, text.str());
    } else if (cmd == suite) {
      srank::SuiteOptions so;
      so.only = fixtures;
      so.law_samples = samples;
      so.seed = seed;
      out.params = {{"fixtures", fixtures}, {"samples", samples}, {"seed", seed}};
      for (const auto& f : fixtures) out.input += srank::find_fixture(f).text;
      if (fixtures.empty())
        for (const auto& f : srank::fixture_catalog()) out.input += f.text;
      const auto r = srank::paper_suite(so);
      for (const auto& f : r.results["fixtures"]) {
        text << f["id"].get<std::string>() << "  " << f["title"].get<std::string>() << "\n";
        for (const auto& fc : f["facts"])
          text << "  [" << fc["status"].get<std::string>() << "] " << fc["claim"].get<std::string>()
               << (fc["subject"].get<std::string>().empty() ? "" : "(" + fc["subject"].get<std::string>() + ")")
               << " = " << fc["expected"].get<std::string>() << "  observed "
               << fc["observed"].get<std::string>() << "\n";
        for (const auto& a : f["assertions"])
          if (a["status"] == "fail") text << "  [fail] " << a["id"].get<std::string>() << ": " << a["detail"].get<std::string>() << "\n";
        text << "  certificates " << f["audit"]["checked"] << " checked, " << f["audit"]["rejected"]
             << " rejected\n";
      }
      const auto& s = r.results["summary"];
      text << "facts " << s["passed"] << "/" << s["facts"] << " pass, " << s["missing"] << " missing, "
           << s["failed"] << " failed; assertion failures " << s["assertions_failed"]
           << "; certificates " << s["certificates"] << " (" << s["certificates_rejected"]
           << " rejected); law violations " << s["law_violations"] << "\n";
      out.emit(r.results, text.str());
      if (r.facts_failed || r.assertions_failed || r.certificates_rejected || r.law_violations)
        rc = kAssertFailed;
      else if (r.facts_missing && require_verdict)
        rc = kNoVerdict;
    } else if (cmd == ver) {
      const auto cert = Json::parse(read_file(certificate_file));
      out.params = {{"certificate_digest", "fnv1a64:" + srank::fnv1a_hex(cert.dump())}};
      const auto r = srank::cmd_verify(out.input, cert.contains("certificate") ? cert["certificate"] : cert);
      text << (r["ok"].get<bool>() ? "accepted\n" : "rejected: " + r["reason"].get<std::string>() + "\n");
      out.emit(r, text.str());
      if (!r["ok"].get<bool>()) rc = kAssertFailed;
    }
    return rc;
  } catch (const srank::SuiteContradiction& e) {
    std::cerr << "contradiction: " << e.what() << "\n" << e.dump().dump(2) << "\n";
    return kAssertFailed;
  } catch (const srank::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const srank::AxiomViolation& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return kInputError;
}
