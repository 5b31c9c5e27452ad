#pragma once

#include <string>

#include "core/braid.hpp"
#include "core/invariants.hpp"
#include "core/laurent.hpp"
#include "core/verify.hpp"

namespace braidforge {

// JSON is the machine contract: key order is fixed and output carries no
// timings, so identical inputs give byte-identical bytes.
std::string poly_json(const LaurentPoly& p, int exponent_denominator = 1);
std::string fingerprint_json(const InvariantFingerprint& fp);
std::string verdict_json(const Verdict& v);
std::string suite_report_json(const SuiteReport& report);

}  // namespace braidforge
