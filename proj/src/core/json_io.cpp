#include "core/json_io.hpp"

#include "json.hpp"

namespace braidforge {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_value(const LaurentPoly& p, int den) {
  ordered_json j;
  j["variable"] = den == 1 ? "t" : "t^(1/" + std::to_string(den) + ")";
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
  j["terms"] = terms;
  j["text"] = p.to_text(den);
  return j;
}

ordered_json verdict_value(const Verdict& v) {
  ordered_json j;
  j["status"] = verdict_status_name(v.status);
  ordered_json rows = ordered_json::array();
  for (const EvidenceRow& row : v.evidence) {
    ordered_json r;
    r["invariant"] = row.invariant;
    r["left"] = row.left;
    r["right"] = row.right;
    r["equal"] = row.equal;
    rows.push_back(r);
  }
  j["evidence"] = rows;
  j["notes"] = v.notes;
  return j;
}

}  // namespace

std::string poly_json(const LaurentPoly& p, int exponent_denominator) {
  return poly_value(p, exponent_denominator).dump();
}

std::string fingerprint_json(const InvariantFingerprint& fp) {
  ordered_json j;
  j["strands"] = fp.strands;
  j["crossings"] = fp.crossings;
  j["components"] = fp.components;
  j["alexander"] = poly_value(fp.alexander, 1);
  j["alexander_degenerate"] = fp.alexander_degenerate;
  if (fp.jones)
    j["jones"] = poly_value(*fp.jones, 4);
  else
    j["jones"] = nullptr;
  if (!fp.jones_skip_reason.empty())
    j["jones_skipped"] = fp.jones_skip_reason;
  if (fp.genus)
    j["genus"] = *fp.genus;
  else
    j["genus"] = nullptr;
  return j.dump();
}

std::string verdict_json(const Verdict& v) { return verdict_value(v).dump(); }

std::string suite_report_json(const SuiteReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["params"] = report.params;
  ordered_json cases = ordered_json::array();
  for (const SuiteCase& c : report.cases) {
    ordered_json cj;
    cj["label"] = c.label;
    cj["expected"] = verdict_status_name(c.expected);
    cj["verdict"] = verdict_value(c.verdict);
    cj["as_expected"] = c.as_expected();
    cases.push_back(cj);
  }
  j["cases"] = cases;
  j["all_expected"] = report.all_expected();
  return j.dump();
}

}  // namespace braidforge
