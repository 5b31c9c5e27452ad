#pragma once

#include <optional>
#include <string>
#include <utility>

#include "core/braid.hpp"
#include "core/burau.hpp"
#include "core/laurent.hpp"
#include "core/temperley_lieb.hpp"

namespace braidforge {

// Comparison object for equivalence checking. Strand and crossing counts are
// carried for reporting only and never take part in equality; jones and
// genus compare only when present on both sides.
struct InvariantFingerprint {
  int components = 1;
  LaurentPoly alexander;            // normalized; zero flags a split closure
  bool alexander_degenerate = false;
  std::optional<LaurentPoly> jones;  // quarter-t exponents
  std::string jones_skip_reason;     // nonempty when jones was skipped
  std::optional<long long> genus;    // positive knot words only
  int strands = 1;
  long long crossings = 0;
};

InvariantFingerprint fingerprint(const BraidWord& w,
                                 const JonesLimits& limits = {});
bool fingerprint_equal(const InvariantFingerprint& a,
                       const InvariantFingerprint& b);

// Bennequin genus (c - n + 1)/2 of a positive braid word with knot closure.
long long positive_braid_genus(const BraidWord& w);

// Searches coprime pairs 2 <= q < p whose torus knot matches the word's
// Alexander polynomial (and Jones, when available within limits). The
// candidate list is finite: (p-1)(q-1) must equal the Alexander degree span.
// A match means "consistent with T(p,q)", not a proof of equivalence.
std::optional<std::pair<long long, long long>> identify_torus_knot(
    const BraidWord& w, const JonesLimits& limits = {});

}  // namespace braidforge
