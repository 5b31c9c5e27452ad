#include "core/invariants.hpp"

#include <numeric>

#include "core/errors.hpp"
#include "core/families.hpp"

namespace braidforge {

InvariantFingerprint fingerprint(const BraidWord& w,
                                 const JonesLimits& limits) {
  InvariantFingerprint fp;
  fp.strands = w.strands();
  fp.crossings = w.crossing_count();
  fp.components = component_count(w);
  fp.alexander = alexander(w);
  fp.alexander_degenerate = fp.alexander.is_zero();
  try {
    fp.jones = jones(w, limits);
  } catch (const ResourceError& e) {
    fp.jones_skip_reason = e.what();
  }
  if (fp.components == 1 && w.all_positive())
    fp.genus = positive_braid_genus(w);
  return fp;
}

bool fingerprint_equal(const InvariantFingerprint& a,
                       const InvariantFingerprint& b) {
  if (a.components != b.components) return false;
  if (!(a.alexander == b.alexander)) return false;
  if (a.jones && b.jones && !(*a.jones == *b.jones)) return false;
  if (a.genus && b.genus && *a.genus != *b.genus) return false;
  return true;
}

long long positive_braid_genus(const BraidWord& w) {
  if (!w.all_positive())
    throw ValidationError("genus formula needs an all-positive word");
  if (component_count(w) != 1)
    throw ValidationError("genus formula needs a knot closure");
  return (w.crossing_count() - w.strands() + 1) / 2;
}

std::optional<std::pair<long long, long long>> identify_torus_knot(
    const BraidWord& w, const JonesLimits& limits) {
  if (component_count(w) != 1)
    throw ValidationError("torus identification needs a knot closure");
  LaurentPoly delta = alexander(w);
  if (delta.is_zero() || delta.span() == 0) return std::nullopt;
  int span = delta.span();

  std::optional<LaurentPoly> jones_w;
  try {
    jones_w = jones(w, limits);
  } catch (const ResourceError&) {
  }

  // span = (p-1)(q-1) for a torus knot, so candidates are divisor splits.
  for (long long qm1 = 1; qm1 * qm1 <= span; ++qm1) {
    if (span % qm1 != 0) continue;
    long long pm1 = span / qm1;
    long long q = qm1 + 1, p = pm1 + 1;
    if (q < 2 || q >= p) continue;
    if (std::gcd(p, q) != 1) continue;
    if (!(torus_alexander(p, q) == delta)) continue;
    if (jones_w) {
      try {
        // T(p,q) = T(q,p); the q-strand presentation keeps the basis small.
        LaurentPoly jones_candidate = jones(
            torus_braid(static_cast<int>(q), static_cast<int>(p)), limits);
        if (!(jones_candidate == *jones_w)) continue;
      } catch (const ResourceError&) {
        // Candidate out of Jones range; the Alexander match stands alone.
      }
    }
    return std::make_pair(p, q);
  }
  return std::nullopt;
}

}  // namespace braidforge
