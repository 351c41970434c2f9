#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ncres/coefficients.hpp"
#include "ncres/errors.hpp"
#include "ncres/fixtures.hpp"
#include "ncres/pipeline.hpp"
#include "ncres/symbol_library.hpp"

namespace ncres {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ncres-report/1";

enum class OutputFormat { json, markdown };

struct RunConfig {
  std::vector<Theorem> theorems{std::begin(kAllTheorems), std::end(kAllTheorems)};
  std::vector<Case> cases{std::begin(kAllCases), std::end(kAllCases)};
  int m_min = 1;
  int m_max = 4;
  RunOptions options;
  OutputFormat format = OutputFormat::json;
  std::string out; // empty: standard output

  void validate() const {
    if (m_min < 1) throw UsageError("--m-min must be at least 1");
    if (m_max < m_min) throw UsageError("--m-max must not be below --m-min");
    if (!(options.tolerance > 0)) throw UsageError("--tolerance must be positive");
    if (options.quadrature_samples < 1) throw UsageError("--samples must be at least 1");
  }
};

inline std::string oracle_mode_name(OracleMode m) {
  switch (m) {
  case OracleMode::exact: return "exact";
  case OracleMode::quadrature: return "quadrature";
  case OracleMode::both: return "both";
  }
  return "both";
}

namespace json_io {

inline Json rational(const mpq_class& q) { return q.get_str(); }

inline Json complex(const GaussianRational& z) { return Json{{"re", rational(z.re())}, {"im", rational(z.im())}}; }

inline Json poly(const SymbolPoly& p) {
  Json a = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json t = complex(c);
    t["monomial"] = mono.str();
    a.push_back(std::move(t));
  }
  return a;
}

inline Json numeric(const std::complex<long double>& z) {
  return Json{{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

inline Json oracle(const OracleStatus& o) {
  Json q = Json::array();
  for (const auto& c : o.quadrature)
    q.push_back({{"seed", c.seed},
                 {"value", numeric(c.result.value)},
                 {"expected", numeric(c.result.expected)},
                 {"error_estimate", static_cast<double>(c.result.error_estimate)},
                 {"pass", c.result.pass}});
  return Json{{"residue_dual", o.residue_dual}, {"ibp_consistent", o.ibp_consistent}, {"in_span", o.in_span},
              {"quadrature_pass", o.quadrature_pass}, {"quadrature", q}, {"errors", o.errors},
              {"pass", o.all_pass()}};
}

inline Json case_report(const CaseReport& c) {
  Json subs = Json::array();
  for (const auto& s : c.subterms) {
    Json forms = Json::array();
    for (const auto& f : s.forms) forms.push_back({{"t", f.t}, {"contour", poly(f.contour.coeff)}, {"equal", f.equal_to_direct}});
    subs.push_back({{"name", s.name},
                    {"integrand", s.integrand.str()},
                    {"contour", poly(s.contour.coeff)},
                    {"reduced", poly(s.reduced)},
                    {"ibp_forms", forms}});
  }
  return Json{{"case", case_name(c.spec.kase)},
              {"m", c.spec.m},
              {"orders", {{"r", c.spec.r}, {"l", c.spec.l}, {"k", c.spec.k}, {"j", c.spec.j}, {"alpha", c.spec.alpha}}},
              {"prefactor", complex(c.prefactor)},
              {"integrand", c.integrand.str()},
              {"contour", poly(c.contour.coeff)},
              {"reduced", poly(c.reduced)},
              {"subterms", subs},
              {"oracle", oracle(c.oracle)},
              {"note", c.note}};
}

inline Json comparison(const Comparison& c) {
  return Json{{"scope", c.scope},
              {"label", c.label},
              {"monomial", c.monomial},
              {"computed", complex(c.computed)},
              {"stated_oracle_constants", complex(c.stated_oracle)},
              {"stated_printed_constants", complex(c.stated_printed)},
              {"match_oracle", c.match_oracle},
              {"match_printed", c.match_printed}};
}

inline Json fixture(const FixtureResult& f) {
  return Json{{"name", f.name},       {"kind", f.kind},         {"printed_text", f.printed_text},
              {"reconstruction", f.reconstruction}, {"m", f.m}, {"match", f.match},
              {"printed", f.printed}, {"computed", f.computed}};
}

} // namespace json_io

inline Json manifest_json(int m_min, int m_max) {
  Json out = Json::array();
  const auto derived = derivative_entries();
  const auto entries = all_entries();
  const auto manifest = library_manifest();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& me = manifest[i];
    Json e{{"op", me.op}, {"slot", me.slot}, {"anchor", me.anchor}, {"kind", me.kind},
           {"reconstruction", me.reconstruction}, {"note", me.note}};
    if (std::find(derived.begin(), derived.end(), entries[i]) != derived.end()) {
      Json checks = Json::array();
      for (int m = m_min; m <= m_max; ++m)
        checks.push_back({{"m", m}, {"derive_ok", derive_check(build_symbol(entries[i].first, entries[i].second, m)).passed}});
      e["derive_checks"] = checks;
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct ReportResult {
  Json report;
  bool oracles_pass = true;
};

inline ReportResult build_report(const RunConfig& cfg) {
  cfg.validate();
  Json theorems = Json::array();
  bool pass = true;
  std::size_t n_cases = 0, n_failed = 0, n_cmp_mismatch = 0, n_fix_dev = 0;

  std::vector<std::future<TheoremReport>> jobs;
  for (Theorem t : cfg.theorems)
    for (int m = cfg.m_min; m <= cfg.m_max; ++m)
      jobs.push_back(std::async(std::launch::async, [&cfg, t, m] { return run_theorem(t, m, cfg.options, cfg.cases); }));

  for (auto& job : jobs) {
    const TheoremReport tr = job.get();
    Json cases = Json::array();
    for (const auto& c : tr.cases) {
      ++n_cases;
      if (!c.oracle.all_pass()) ++n_failed;
      cases.push_back(json_io::case_report(c));
    }
    pass = pass && tr.all_oracles_pass();
    Json cmps = Json::array();
    for (const auto& c : tr.comparisons) {
      if (!c.match_oracle) ++n_cmp_mismatch;
      cmps.push_back(json_io::comparison(c));
    }
    Json fixtures = Json::array();
    for (const auto& fx : integrand_fixtures()) {
      if (fx.theorem != tr.theorem || std::find(cfg.cases.begin(), cfg.cases.end(), fx.kase) == cfg.cases.end()) continue;
      const FixtureResult f = evaluate_fixture(fx, tr.m);
      if (!f.match) ++n_fix_dev;
      fixtures.push_back(json_io::fixture(f));
    }
    theorems.push_back({{"theorem", theorem_name(tr.theorem)},
                        {"m", tr.m},
                        {"totals", json_io::poly(tr.totals)},
                        {"oracles_pass", tr.all_oracles_pass()},
                        {"cases", cases},
                        {"comparisons", cmps},
                        {"fixtures", fixtures}});
  }

  Json projections = Json::array();
  for (int m = cfg.m_min; m <= cfg.m_max; ++m)
    for (const auto& f : evaluate_projection_fixtures(m)) {
      if (!f.match) ++n_fix_dev;
      projections.push_back(json_io::fixture(f));
    }

  Json errata = Json::array();
  std::size_t n_errata_mismatch = 0;
  for (const auto& r : errata_table(cfg.m_min, cfg.m_max)) {
    if (!r.match) ++n_errata_mismatch;
    errata.push_back({{"name", r.name},
                      {"m", r.m},
                      {"printed", json_io::complex(r.printed)},
                      {"oracle", json_io::complex(r.oracle)},
                      {"match", r.match}});
  }

  Json theorem_sel = Json::array(), case_sel = Json::array();
  for (Theorem t : cfg.theorems) theorem_sel.push_back(theorem_name(t));
  for (Case c : cfg.cases) case_sel.push_back(case_name(c));

  Json report{
      {"schema", kReportSchema},
      {"config",
       {{"theorems", theorem_sel},
        {"cases", case_sel},
        {"m_min", cfg.m_min},
        {"m_max", cfg.m_max},
        {"oracle", oracle_mode_name(cfg.options.oracle)},
        {"tolerance", static_cast<double>(cfg.options.tolerance)},
        {"seed", cfg.options.seed},
        {"quadrature_samples", cfg.options.quadrature_samples}}},
      {"summary",
       {{"oracles_pass", pass},
        {"cases_run", n_cases},
        {"cases_failing_oracles", n_failed},
        {"comparison_mismatches", n_cmp_mismatch},
        {"fixture_deviations", n_fix_dev},
        {"errata_mismatches", n_errata_mismatch}}},
      {"manifest", manifest_json(cfg.m_min, cfg.m_max)},
      {"errata", errata},
      {"projection_fixtures", projections},
      {"theorems", theorems}};
  return {std::move(report), pass};
}

namespace md {

inline std::string cx(const Json& z) {
  const std::string re = z["re"], im = z["im"];
  if (im == "0") return re;
  if (re == "0") return im + "i";
  return re + (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

inline std::string poly(const Json& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& t : p) {
    if (!s.empty()) s += " + ";
    s += "(" + cx(t) + ")·" + t["monomial"].get<std::string>();
  }
  return s;
}

inline const char* yes(bool b) { return b ? "MATCH" : "DEVIATION"; }
inline const char* ok(bool b) { return b ? "ok" : "FAIL"; }

} // namespace md

inline std::string render_markdown(const Json& r) {
  std::ostringstream o;
  const Json& cfg = r["config"];
  const Json& sum = r["summary"];
  o << "# Boundary residue verification report\n\n";
  o << "Schema `" << r["schema"].get<std::string>() << "`. m = " << cfg["m_min"] << ".." << cfg["m_max"]
    << ", oracle mode `" << cfg["oracle"].get<std::string>() << "`, tolerance " << cfg["tolerance"].dump()
    << ", seed " << cfg["seed"] << ", " << cfg["quadrature_samples"] << " quadrature samples per case.\n\n";
  o << "## Summary\n\n";
  o << "| item | value |\n|---|---|\n";
  o << "| internal oracles | " << (sum["oracles_pass"].get<bool>() ? "PASS" : "FAIL") << " |\n";
  for (const char* k : {"cases_run", "cases_failing_oracles", "comparison_mismatches", "fixture_deviations",
                        "errata_mismatches"})
    o << "| " << k << " | " << sum[k] << " |\n";

  o << "\n## Symbol library\n\n| operator | slot | printed form | kind | reconstruction | derivation |\n|---|---|---|---|---|---|\n";
  for (const auto& e : r["manifest"]) {
    std::string d = "-";
    if (e.contains("derive_checks")) {
      bool all = true;
      for (const auto& c : e["derive_checks"]) all = all && c["derive_ok"].get<bool>();
      d = all ? "ok" : "DEVIATION";
    }
    o << "| " << e["op"].get<std::string>() << " | " << e["slot"].get<std::string>() << " | `"
      << e["anchor"].get<std::string>() << "` | " << e["kind"].get<std::string>() << " | "
      << (e["reconstruction"].get<bool>() ? "yes" : "no") << " | " << d << " |\n";
  }

  o << "\n## Closed-form constants\n\n| name | m | printed | contour oracle | verdict |\n|---|---|---|---|---|\n";
  for (const auto& e : r["errata"])
    o << "| " << e["name"].get<std::string>() << " | " << e["m"] << " | " << md::cx(e["printed"]) << " | "
      << md::cx(e["oracle"]) << " | " << md::yes(e["match"]) << " |\n";

  o << "\n## Projection fixtures\n\n| m | fixture | verdict |\n|---|---|---|\n";
  for (const auto& f : r["projection_fixtures"])
    o << "| " << f["m"] << " | " << f["name"].get<std::string>() << (f["reconstruction"].get<bool>() ? " (reconstructed)" : "")
      << " | " << md::yes(f["match"]) << " |\n";

  for (const auto& t : r["theorems"]) {
    o << "\n## " << t["theorem"].get<std::string>() << ", m = " << t["m"] << "\n\n";
    o << "Total: " << md::poly(t["totals"]) << ". Internal oracles: " << (t["oracles_pass"].get<bool>() ? "PASS" : "FAIL")
      << ".\n\n";
    o << "| case | prefactor | reduced | residue dual | IBP | span | quadrature |\n|---|---|---|---|---|---|---|\n";
    for (const auto& c : t["cases"]) {
      const Json& orc = c["oracle"];
      o << "| " << c["case"].get<std::string>() << " | " << md::cx(c["prefactor"]) << " | " << md::poly(c["reduced"])
        << " | " << md::ok(orc["residue_dual"]) << " | " << md::ok(orc["ibp_consistent"]) << " | "
        << md::ok(orc["in_span"]) << " | " << md::ok(orc["quadrature_pass"]) << " |\n";
    }
    bool any_sub = false;
    for (const auto& c : t["cases"])
      if (c["subterms"].size() > 1) {
        if (!any_sub) o << "\nSub-terms:\n\n| case | part | reduced |\n|---|---|---|\n";
        any_sub = true;
        for (const auto& s : c["subterms"])
          o << "| " << c["case"].get<std::string>() << " | " << s["name"].get<std::string>() << " | "
            << md::poly(s["reduced"]) << " |\n";
      }
    if (!t["comparisons"].empty()) {
      o << "\n| scope | rendering | monomial | computed | stated (oracle constants) | stated (printed constants) | verdict "
           "| printed verdict |\n|---|---|---|---|---|---|---|---|\n";
      for (const auto& c : t["comparisons"])
        o << "| " << c["scope"].get<std::string>() << " | " << c["label"].get<std::string>() << " | "
          << c["monomial"].get<std::string>() << " | " << md::cx(c["computed"]) << " | "
          << md::cx(c["stated_oracle_constants"]) << " | " << md::cx(c["stated_printed_constants"]) << " | "
          << md::yes(c["match_oracle"]) << " | " << md::yes(c["match_printed"]) << " |\n";
    }
    if (!t["fixtures"].empty()) {
      o << "\n| traced integrand | verdict |\n|---|---|\n";
      for (const auto& f : t["fixtures"]) o << "| " << f["name"].get<std::string>() << " | " << md::yes(f["match"]) << " |\n";
    }
  }
  return o.str();
}

inline std::string render_report(const Json& report, OutputFormat f) {
  return f == OutputFormat::json ? report.dump(2) + "\n" : render_markdown(report);
}

/// Writes to a temporary sibling file and renames it over the target.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + path);
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw UsageError("cannot write " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageError("cannot write " + path);
  }
}

inline RunConfig parse_selectors(const std::string& theorem, const std::string& kase, RunConfig cfg) {
  if (theorem != "all") {
    if (theorem == "1") cfg.theorems = {Theorem::T1};
    else if (theorem == "2") cfg.theorems = {Theorem::T2};
    else if (theorem == "3") cfg.theorems = {Theorem::T3};
    else throw UsageError("--theorem must be 1, 2, 3 or all");
  }
  if (kase != "all") {
    cfg.cases.clear();
    for (Case c : kAllCases)
      if (case_name(c) == kase) cfg.cases = {c};
    if (cfg.cases.empty()) throw UsageError("--case must be I, II, III, IV, V or all");
  }
  return cfg;
}

/// Exit codes: 0 when every internal oracle agrees, 1 on an internal disagreement, 2 on a usage error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact verification of boundary noncommutative residue computations"};
  std::string theorem = "all", kase = "all", oracle = "both", format = "json";
  RunConfig cfg;
  double tolerance = 1e-8;
  app.add_option("--theorem", theorem, "1, 2, 3 or all")->capture_default_str();
  app.add_option("--case", kase, "I, II, III, IV, V or all")->capture_default_str();
  app.add_option("--m-min", cfg.m_min, "smallest m")->capture_default_str();
  app.add_option("--m-max", cfg.m_max, "largest m")->capture_default_str();
  app.add_option("--oracle", oracle, "exact, quadrature or both")
      ->check(CLI::IsMember({"exact", "quadrature", "both"}))
      ->capture_default_str();
  app.add_option("--tolerance", tolerance, "relative quadrature tolerance")->capture_default_str();
  app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
  app.add_option("--out", cfg.out, "report path (standard output when omitted)");
  app.add_option("--seed", cfg.options.seed, "seed for quadrature sample assignments")->capture_default_str();
  app.add_option("--samples", cfg.options.quadrature_samples, "quadrature samples per case")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg = parse_selectors(theorem, kase, cfg);
    cfg.options.oracle = oracle == "exact" ? OracleMode::exact : oracle == "quadrature" ? OracleMode::quadrature : OracleMode::both;
    cfg.options.tolerance = tolerance;
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::markdown;
    cfg.validate();
    const ReportResult res = build_report(cfg);
    const std::string text = render_report(res.report, cfg.format);
    if (cfg.out.empty()) out << text;
    else write_atomically(cfg.out, text);
    if (!res.oracles_pass) err << "internal oracle disagreement; see the report\n";
    return res.oracles_pass ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace ncres
