#include "sallylab/report.hpp"

#include <sstream>
#include <stdexcept>

#include "sallylab/closures.hpp"
#include "sallylab/errors.hpp"
#include "sallylab/hilbert.hpp"
#include "sallylab/sally.hpp"

namespace sallylab {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "md" || text == "markdown") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, md or csv)");
}

namespace {

constexpr std::pair<Command, const char*> kCommandNames[] = {
    {Command::Analyze, "analyze"}, {Command::Hilbert, "hilbert"},   {Command::Sally, "sally"},
    {Command::Classify, "classify"}, {Command::Closure, "closure"}, {Command::Reduction, "reduction"},
};

}  // namespace

std::string to_string(Command command) {
  for (const auto& [c, name] : kCommandNames)
    if (c == command) return name;
  return "?";
}

Command parse_command(const std::string& text) {
  for (const auto& [c, name] : kCommandNames)
    if (text == name) return c;
  throw std::invalid_argument("unknown command '" + text + "'");
}

namespace {

Json dec(const Integer& v) { return to_decimal(v); }

Json dec_list(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(dec(v));
  return out;
}

Json exponents(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) {
    Json e = Json::array();
    for (auto x : g.exponents()) e.push_back(x);
    out.push_back(std::move(e));
  }
  return out;
}

Json ideal_json(const MonomialIdeal& ideal) {
  return Json{{"text", to_string(ideal)}, {"generators", exponents(ideal)}};
}

Json hilbert_json(const HilbertFunctionTable& table, const HilbertCoefficients& coeffs,
                  std::optional<bool> multiplicity_ok) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < table.values.size(); ++n)
    rows.push_back({{"n", n},
                    {"H", dec(table.values[n])},
                    {"P", dec(eval_binomial_poly(coeffs.e, coeffs.dim, static_cast<long long>(n)))}});
  Json out{{"table", std::move(rows)}, {"e", dec_list(coeffs.e)}, {"postulation", coeffs.postulation}};
  out["multiplicity_equals_colength_q"] = multiplicity_ok ? Json(*multiplicity_ok) : Json(nullptr);
  return out;
}

Json flags_json(const HypothesisFlags& f) {
  return {{"is_reduction", f.is_reduction},
          {"I2_eq_QI", f.i2_eq_qi},
          {"I3_eq_QI2", f.i3_eq_qi2},
          {"mI2_in_QI", f.mi2_in_qi},
          {"hypotheses_hold", f.hypotheses()},
          {"integrally_closed", f.integrally_closed},
          {"ratliff_rush_closed", f.ratliff_rush_closed ? Json(*f.ratliff_rush_closed) : Json(nullptr)}};
}

Json classification_json(const Classification& cls) {
  Json out{{"tag", to_string(cls.tag)}};
  out["subcase"] = cls.subcase ? Json(cls.subcase == 1 ? "i" : "ii") : Json(nullptr);
  out["c"] = cls.c ? Json(*cls.c) : Json(nullptr);
  out["depth_G"] = to_string(cls.depth);
  out["expected_rank"] = cls.expected_rank ? dec(*cls.expected_rank) : Json(nullptr);
  out["expected_e2"] = cls.expected_e2 ? dec(*cls.expected_e2) : Json(nullptr);
  out["sally_shape"] = cls.sally ? Json(cls.sally->shape) : Json(nullptr);
  out["sally_from"] = cls.sally ? Json(cls.sally->from) : Json(nullptr);
  if (cls.hilbert) {
    out["hilbert_route"] =
        cls.hilbert->route == HilbertPrediction::Route::Displayed ? "displayed" : "resolution";
    out["hilbert_from"] = cls.hilbert->from;
  } else {
    out["hilbert_route"] = nullptr;
    out["hilbert_from"] = nullptr;
  }
  return out;
}

Json checks_json(const std::vector<InequalityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
  return out;
}

Json points_json(const std::vector<PointCheck>& points) {
  Json out = Json::array();
  for (const auto& p : points)
    out.push_back({{"n", p.n}, {"predicted", dec(p.predicted)}, {"computed", dec(p.computed)}, {"ok", p.ok()}});
  return out;
}

Json closed_form_json(const ClosedFormReport& r) {
  return {{"all_hold", r.all_hold()},
          {"hilbert", points_json(r.hilbert)},
          {"sally", points_json(r.sally)},
          {"relations", checks_json(r.relations)}};
}

Json closure_json(const MonomialIdeal& ideal) {
  const auto closure = integral_closure(ideal);
  Json out{{"integral_closure", ideal_json(closure)}, {"integrally_closed", closure == ideal}};
  if (ideal.dim() == 2) {
    const auto rr = ratliff_rush(ideal);
    out["ratliff_rush"] = {{"closure", ideal_json(rr.ideal)},
                           {"ratliff_rush_closed", rr.ideal == ideal},
                           {"stable_at", rr.stable_at},
                           {"heuristic", rr.heuristic}};
  } else {
    out["ratliff_rush"] = nullptr;
  }
  return out;
}

Json reduction_json(const MonomialIdeal& q, const MonomialIdeal& ideal) {
  const bool reduces = is_reduction(q, ideal);
  Json out{{"is_reduction", reduces}};
  out["reduction_number"] = nullptr;
  if (reduces) {
    try {
      out["reduction_number"] = reduction_number(q, ideal);
    } catch (const BudgetExceeded& err) {
      out["reduction_number_error"] = err.what();
    }
  }
  return out;
}

void collect_failures(Json& failures, const std::vector<InequalityCheck>& checks,
                      const std::string& prefix) {
  for (const auto& c : checks)
    if (c.applicable && !c.holds) failures.push_back(prefix + c.name + ": " + c.detail);
}

}  // namespace

Report run_command(Command command, const IdealSpec& spec, std::optional<std::size_t> window) {
  const std::size_t n_window = window.value_or(default_window(spec.dim));
  Report report;
  Json& doc = report.doc;
  doc["schema"] = kAnalysisSchema;
  doc["command"] = to_string(command);
  doc["spec"] = Json::parse(render_spec(spec));
  doc["window"] = n_window;
  Json failures = Json::array();

  try {
    const auto q = spec.q_ideal();
    const auto ideal = spec.ideal();
    doc["Q"] = ideal_json(q);
    doc["I"] = ideal_json(ideal);

    switch (command) {
      case Command::Hilbert: {
        const auto table = hilbert_function(ideal, n_window);
        const auto coeffs = binomial_fit(table, spec.dim);
        std::optional<bool> mult;
        if (is_reduction(q, ideal)) mult = coeffs.e.at(0) == colength(q);
        doc["colength"] = {{"I", dec(colength(ideal))}, {"Q", dec(colength(q))}};
        doc["hilbert"] = hilbert_json(table, coeffs, mult);
        if (mult && !*mult) failures.push_back("multiplicity: e0 differs from length(A/Q)");
        break;
      }
      case Command::Closure:
        doc["closure"] = closure_json(ideal);
        break;
      case Command::Reduction:
        doc["reduction"] = reduction_json(q, ideal);
        break;
      case Command::Analyze:
      case Command::Sally:
      case Command::Classify: {
        const auto profile = compute_profile(ideal, q, n_window);
        const auto inequalities = check_inequalities(profile);
        std::optional<ClosedFormReport> closed;
        if (profile.classification) closed = verify_closed_form(*profile.classification, profile);
        const bool mult = profile.coefficients.e.at(0) == profile.colength_q;

        if (command != Command::Classify)
          doc["colength"] = {{"I", dec(profile.colength_i)}, {"Q", dec(profile.colength_q)}};
        if (command == Command::Analyze) doc["hilbert"] = hilbert_json(profile.table, profile.coefficients, mult);
        if (command != Command::Classify) {
          doc["sally"] = {{"s", dec_list(profile.s)},
                          {"rank", dec(profile.rank)},
                          {"m", profile.m_inv ? dec(*profile.m_inv) : Json(nullptr)}};
        } else {
          doc["sally"] = {{"s1", dec(profile.s.at(1))},
                          {"s2", dec(profile.s.at(2))},
                          {"rank", dec(profile.rank)},
                          {"m", profile.m_inv ? dec(*profile.m_inv) : Json(nullptr)}};
        }
        doc["hypotheses"] = flags_json(profile.flags);
        if (command != Command::Sally) {
          doc["classification"] =
              profile.classification ? classification_json(*profile.classification) : Json(nullptr);
          doc["closed_form"] = closed ? closed_form_json(*closed) : Json(nullptr);
        }
        doc["inequalities"] = checks_json(inequalities.checks);
        if (command == Command::Analyze) {
          doc["closure"] = closure_json(ideal);
          doc["reduction"] = reduction_json(q, ideal);
        }

        if (!mult) failures.push_back("multiplicity: e0 differs from length(A/Q)");
        collect_failures(failures, inequalities.checks, "");
        if (closed) {
          for (const auto& p : closed->hilbert)
            if (!p.ok()) failures.push_back("closed_form: H(" + std::to_string(p.n) + ")");
          for (const auto& p : closed->sally)
            if (!p.ok()) failures.push_back("closed_form: s_" + std::to_string(p.n));
          collect_failures(failures, closed->relations, "closed_form: ");
        }
        break;
      }
    }
  } catch (const Error& err) {
    doc["error"] = {{"kind", err.kind()}, {"message", err.what()}};
    failures.push_back(err.kind() + ": " + err.what());
  }

  doc["failures"] = failures;
  doc["ok"] = failures.empty();
  report.exit_code = failures.empty() ? 0 : 1;
  return report;
}

Report search_report(const SearchReport& r) {
  Report report;
  Json& doc = report.doc;
  const auto& c = r.config;
  doc["schema"] = kSearchSchema;
  doc["generator"] = {{"name", kGeneratorName},
                      {"stream", "instance i starts from state mix64(seed + mix64(i))"}};
  doc["config"] = {{"dim", c.dim},
                   {"box", c.box},
                   {"extra_min", c.extra_min},
                   {"extra_max", c.extra_max},
                   {"samples", c.samples},
                   {"seed", c.seed},
                   {"mode", to_string(c.mode)},
                   {"sampler", to_string(c.sampler)},
                   {"window", c.effective_window()}};
  doc["generated"] = r.generated;
  doc["kept"] = r.kept;
  doc["skipped"] = Json::object();
  for (const auto& [reason, count] : r.skipped) doc["skipped"][reason] = count;
  doc["tags"] = Json::object();
  for (const auto& [tag, count] : r.tags) doc["tags"][tag] = count;
  Json histogram = Json::array();
  for (const auto& [key, count] : r.histogram) {
    const auto& [rank, m, s1, s2] = key;
    histogram.push_back({{"rank", dec(rank)}, {"m", dec(m)}, {"s1", dec(s1)}, {"s2", dec(s2)}, {"count", count}});
  }
  doc["histogram"] = std::move(histogram);
  doc["checks"] = Json::object();
  for (const auto& [name, tally] : r.checks)
    doc["checks"][name] = {{"evaluated", tally.evaluated}, {"failed", tally.failed}};
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"index", v.index},
                          {"check", v.check},
                          {"guaranteed", v.guaranteed},
                          {"detail", v.detail},
                          {"Q", ideal_json(v.q)},
                          {"I", ideal_json(v.ideal)}});
  doc["violations"] = std::move(violations);
  doc["guaranteed_violation"] = r.has_guaranteed_violation();
  report.exit_code = r.has_guaranteed_violation() ? 1 : 0;
  return report;
}

Report claims_report(const std::vector<ClaimResult>& results) {
  Report report;
  Json& doc = report.doc;
  std::size_t passed = 0, failed = 0, skipped = 0;
  Json claims = Json::array();
  for (const auto& r : results) {
    passed += r.status == ClaimStatus::Pass;
    failed += r.status == ClaimStatus::Fail;
    skipped += r.status == ClaimStatus::Skip;
    claims.push_back({{"id", r.id},
                      {"status", to_string(r.status)},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"provenance", r.provenance},
                      {"description", r.description}});
  }
  doc["schema"] = kClaimsSchema;
  doc["total"] = results.size();
  doc["passed"] = passed;
  doc["failed"] = failed;
  doc["skipped"] = skipped;
  doc["claims"] = std::move(claims);
  report.exit_code = failed == 0 ? 0 : 1;
  return report;
}

// ---- rendering ----

namespace {

std::string text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

std::string md_cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

void md_row(std::ostream& os, const std::vector<std::string>& cells) {
  os << '|';
  for (const auto& c : cells) os << ' ' << md_cell(c) << " |";
  os << '\n';
}

void md_table(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  md_row(os, header);
  os << '|';
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : rows) md_row(os, r);
  os << '\n';
}

void md_object(std::ostream& os, const Json& obj) {
  if (obj.empty()) {
    os << "none\n\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [k, v] : obj.items()) rows.push_back({k, text(v)});
  md_table(os, {"field", "value"}, rows);
}

// Rows of (n, H, P, s) from whichever of the hilbert and sally sections exist.
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> n_table(const Json& doc) {
  std::vector<std::string> header{"n"};
  const Json* hilbert = doc.contains("hilbert") ? &doc["hilbert"]["table"] : nullptr;
  const Json* sally = doc.contains("sally") && doc["sally"].contains("s") ? &doc["sally"]["s"] : nullptr;
  if (hilbert) header.insert(header.end(), {"H", "P"});
  if (sally) header.push_back("s");
  std::size_t rows_n = hilbert ? hilbert->size() : sally ? sally->size() : 0;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < rows_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    if (hilbert) row.insert(row.end(), {text((*hilbert)[n]["H"]), text((*hilbert)[n]["P"])});
    if (sally) row.push_back(n < sally->size() ? text((*sally)[n]) : "-");
    rows.push_back(std::move(row));
  }
  return {header, rows};
}

std::string analysis_md(const Json& doc) {
  std::ostringstream os;
  os << "# " << text(doc["command"]) << ": " << text(doc["spec"].value("label", Json("unlabelled")))
     << "\n\n";
  if (doc.contains("I")) os << "- I = " << text(doc["I"]["text"]) << "\n- Q = " << text(doc["Q"]["text"]) << '\n';
  os << "- window = " << text(doc["window"]) << "\n- ok = " << text(doc["ok"]) << "\n\n";
  if (doc.contains("error"))
    os << "**error** " << text(doc["error"]["kind"]) << ": " << text(doc["error"]["message"]) << "\n\n";
  if (doc.contains("colength")) {
    os << "## Colengths\n\n";
    md_object(os, doc["colength"]);
  }
  if (doc.contains("hilbert")) {
    const auto& h = doc["hilbert"];
    os << "## Hilbert coefficients\n\n";
    std::vector<std::string> header, row;
    for (std::size_t i = 0; i < h["e"].size(); ++i) {
      header.push_back("e" + std::to_string(i));
      row.push_back(text(h["e"][i]));
    }
    header.insert(header.end(), {"postulation", "e0 = length(A/Q)"});
    row.insert(row.end(), {text(h["postulation"]), text(h["multiplicity_equals_colength_q"])});
    md_table(os, header, {row});
  }
  if (doc.contains("hilbert") || (doc.contains("sally") && doc["sally"].contains("s"))) {
    os << "## Table\n\n";
    const auto [header, rows] = n_table(doc);
    md_table(os, header, rows);
  }
  if (doc.contains("sally")) {
    os << "## Sally module\n\n";
    Json summary = doc["sally"];
    if (summary.contains("s")) summary.erase("s");
    md_object(os, summary);
  }
  if (doc.contains("hypotheses")) {
    os << "## Hypotheses\n\n";
    md_object(os, doc["hypotheses"]);
  }
  if (doc.contains("classification")) {
    os << "## Classification\n\n";
    if (doc["classification"].is_null()) os << "not classified (hypotheses do not hold)\n\n";
    else md_object(os, doc["classification"]);
  }
  if (doc.contains("closed_form") && !doc["closed_form"].is_null()) {
    const auto& cf = doc["closed_form"];
    os << "## Closed-form verification\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto* part : {"hilbert", "sally"})
      for (const auto& p : cf[part])
        rows.push_back({part, text(p["n"]), text(p["predicted"]), text(p["computed"]), p["ok"] ? "PASS" : "FAIL"});
    for (const auto& r : cf["relations"])
      rows.push_back({"relation", text(r["name"]), "-", text(r["detail"]), r["holds"] ? "PASS" : "FAIL"});
    md_table(os, {"quantity", "n", "predicted", "computed", "status"}, rows);
  }
  if (doc.contains("inequalities")) {
    os << "## Inequalities\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : doc["inequalities"])
      rows.push_back({text(c["name"]), !c["applicable"] ? "n/a" : c["holds"] ? "PASS" : "FAIL", text(c["detail"])});
    md_table(os, {"check", "status", "detail"}, rows);
  }
  if (doc.contains("closure")) {
    const auto& c = doc["closure"];
    os << "## Closures\n\n";
    std::vector<std::vector<std::string>> rows{
        {"integral closure", text(c["integral_closure"]["text"])},
        {"integrally closed", text(c["integrally_closed"])}};
    if (!c["ratliff_rush"].is_null()) {
      rows.push_back({"Ratliff-Rush closure (heuristic)", text(c["ratliff_rush"]["closure"]["text"])});
      rows.push_back({"Ratliff-Rush closed", text(c["ratliff_rush"]["ratliff_rush_closed"])});
      rows.push_back({"chain stable at n", text(c["ratliff_rush"]["stable_at"])});
    }
    md_table(os, {"field", "value"}, rows);
  }
  if (doc.contains("reduction")) {
    os << "## Reduction\n\n";
    md_object(os, doc["reduction"]);
  }
  if (!doc["failures"].empty()) {
    os << "## Failures\n\n";
    for (const auto& f : doc["failures"]) os << "- " << text(f) << '\n';
  }
  return os.str();
}

std::string analysis_csv(const Json& doc) {
  std::ostringstream os;
  if (doc.contains("hilbert") || (doc.contains("sally") && doc["sally"].contains("s"))) {
    const auto [header, rows] = n_table(doc);
    csv_row(os, header);
    for (const auto& r : rows) csv_row(os, r);
    return os.str();
  }
  // Commands without an n-indexed table: one key,value row per scalar.
  csv_row(os, {"key", "value"});
  for (const auto* section : {"sally", "classification", "closure", "reduction"}) {
    if (!doc.contains(section) || !doc[section].is_object()) continue;
    for (const auto& [k, v] : doc[section].items()) {
      if (v.is_object() && v.contains("text")) csv_row(os, {std::string(section) + "." + k, text(v["text"])});
      else if (!v.is_structured()) csv_row(os, {std::string(section) + "." + k, text(v)});
    }
  }
  if (doc.contains("error")) csv_row(os, {"error", text(doc["error"]["kind"])});
  return os.str();
}

std::string search_md(const Json& doc) {
  std::ostringstream os;
  os << "# Search\n\n";
  md_object(os, doc["config"]);
  os << "- generator: " << text(doc["generator"]["name"]) << " (" << text(doc["generator"]["stream"]) << ")\n"
     << "- generated: " << text(doc["generated"]) << "\n- kept: " << text(doc["kept"])
     << "\n- guaranteed violation: " << text(doc["guaranteed_violation"]) << "\n\n";
  os << "## Skipped\n\n";
  md_object(os, doc["skipped"]);
  os << "## Tags\n\n";
  md_object(os, doc["tags"]);
  os << "## Checks\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& [name, t] : doc["checks"].items())
    rows.push_back({name, text(t["evaluated"]), text(t["failed"])});
  md_table(os, {"check", "evaluated", "failed"}, rows);
  os << "## Histogram of (rank, m, s1, s2)\n\n";
  rows.clear();
  for (const auto& h : doc["histogram"])
    rows.push_back({text(h["rank"]), text(h["m"]), text(h["s1"]), text(h["s2"]), text(h["count"])});
  md_table(os, {"rank", "m", "s1", "s2", "count"}, rows);
  os << "## Violations\n\n";
  if (doc["violations"].empty()) os << "none\n";
  for (const auto& v : doc["violations"])
    os << "- #" << text(v["index"]) << ' ' << text(v["check"]) << (v["guaranteed"] ? " (guaranteed)" : " (open)")
       << ": I = " << text(v["I"]["text"]) << ", Q = " << text(v["Q"]["text"]) << "; " << text(v["detail"]) << '\n';
  return os.str();
}

std::string search_csv(const Json& doc) {
  std::ostringstream os;
  csv_row(os, {"rank", "m", "s1", "s2", "count"});
  for (const auto& h : doc["histogram"])
    csv_row(os, {text(h["rank"]), text(h["m"]), text(h["s1"]), text(h["s2"]), text(h["count"])});
  return os.str();
}

std::string claims_md(const Json& doc) {
  std::ostringstream os;
  os << "# Worked-example claims\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : doc["claims"])
    rows.push_back({text(c["status"]), text(c["id"]), text(c["expected"]), text(c["computed"]),
                    text(c["provenance"])});
  md_table(os, {"status", "claim", "expected", "computed", "provenance"}, rows);
  os << text(doc["passed"]) << " passed, " << text(doc["failed"]) << " failed, " << text(doc["skipped"])
     << " skipped of " << text(doc["total"]) << '\n';
  return os.str();
}

std::string claims_csv(const Json& doc) {
  std::ostringstream os;
  csv_row(os, {"id", "status", "expected", "computed", "provenance", "description"});
  for (const auto& c : doc["claims"])
    csv_row(os, {text(c["id"]), text(c["status"]), text(c["expected"]), text(c["computed"]),
                 text(c["provenance"]), text(c["description"])});
  return os.str();
}

}  // namespace

std::string render(const Json& doc, Format format) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  const std::string schema = doc.value("schema", "");
  const bool md = format == Format::Markdown;
  if (schema == kAnalysisSchema) return md ? analysis_md(doc) : analysis_csv(doc);
  if (schema == kSearchSchema) return md ? search_md(doc) : search_csv(doc);
  if (schema == kClaimsSchema) return md ? claims_md(doc) : claims_csv(doc);
  throw std::invalid_argument("unknown report schema '" + schema + "'");
}

}  // namespace sallylab
