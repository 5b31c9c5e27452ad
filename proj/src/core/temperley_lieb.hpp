#pragma once

#include <cstdint>
#include <optional>

#include "core/braid.hpp"
#include "core/laurent.hpp"

namespace braidforge {

// Resource caps for the Temperley-Lieb computation. The basis has Catalan(n)
// diagrams, so the strand cap is the knob that matters.
struct JonesLimits {
  int max_strands = 10;
  long long max_crossings = 200;

  // Reads BRAIDFORGE_JONES_MAX_STRANDS / BRAIDFORGE_JONES_MAX_CROSSINGS.
  static JonesLimits from_env();
};

// Jones polynomial of the oriented closure. Convention: Kauffman bracket in
// A with sigma_i -> A + A^-1 e_i and loop value -A^2 - A^-2, multiplied by
// (-A^3)^(-writhe), then t = A^-4. The returned polynomial stores exponents
// in quarter powers of t (exponent 4 means t^1), which keeps link values
// with fractional exponents exact; knots always land on multiples of 4.
// Throws ResourceError above the limits.
LaurentPoly jones(const BraidWord& w, const JonesLimits& limits = {});

}  // namespace braidforge
