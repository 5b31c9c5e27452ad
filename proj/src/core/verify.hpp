#pragma once

#include <string>
#include <vector>

#include "core/braid.hpp"
#include "core/invariants.hpp"
#include "core/laurent.hpp"
#include "core/temperley_lieb.hpp"

namespace braidforge {

enum class VerdictStatus { consistent, distinct, skipped };
const char* verdict_status_name(VerdictStatus s);

struct EvidenceRow {
  std::string invariant;
  std::string left;
  std::string right;
  bool equal = false;
};

// "consistent" is necessary, not sufficient: fingerprints are incomplete
// invariants, so equality certifies nothing beyond what was compared.
struct Verdict {
  VerdictStatus status = VerdictStatus::skipped;
  std::vector<EvidenceRow> evidence;
  std::vector<std::string> notes;
};

enum class CompareLevel { alexander_only, full };

// Compares component counts, normalized Alexander, and (full level, knots
// only, within limits) Jones. Jones resource failures downgrade to
// alexander-only with a note.
Verdict check_equivalent(const BraidWord& a, const BraidWord& b,
                         CompareLevel level, const JonesLimits& limits = {});

struct SuiteCase {
  std::string label;
  VerdictStatus expected = VerdictStatus::consistent;
  Verdict verdict;
  double millis = 0;

  bool as_expected() const { return verdict.status == expected; }
};

struct SuiteReport {
  std::string suite;
  std::vector<std::vector<long long>> params;
  std::vector<SuiteCase> cases;

  bool all_expected() const;
};

struct SuiteInfo {
  std::string id;
  std::string description;
  std::string param_names;  // e.g. "p q s"
  std::vector<std::vector<long long>> default_params;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo& suite_info(const std::string& id);  // throws on unknown id

SuiteReport run_suite(const std::string& id,
                      const std::vector<std::vector<long long>>& params,
                      const JonesLimits& limits = {});

struct ScanBounds {
  int p_max = 0;
  int q_max = 0;             // 0 means p_max - 1
  long long crossing_cap = 600;
};

// Enumerates T(p, q; r, 1) with 2 <= r < p <= p_max, r not a multiple of q,
// and reports for each knot instance whether its Alexander polynomial
// matches one of the known positive-family cables or some torus knot. An
// evidence table, not a proof.
SuiteReport scan_conjecture(const ScanBounds& bounds,
                            const JonesLimits& limits = {});

std::string suite_report_text(const SuiteReport& report, bool with_timings);

}  // namespace braidforge
