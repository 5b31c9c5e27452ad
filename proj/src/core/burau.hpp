#pragma once

#include "core/braid.hpp"
#include "core/laurent.hpp"

namespace braidforge {

// Alexander polynomial of the closure, from the reduced Burau matrix:
// det(rb(w) - I) divided by 1 + t + ... + t^{n-1}, then normalized to
// minimal exponent 0 with positive lowest coefficient. Links are allowed;
// split closures give the zero polynomial. The empty 1-strand braid gives 1.
LaurentPoly alexander(const BraidWord& w);

// Closed form (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)) for coprime p, q >= 1,
// normalized. Returns 1 when p or q is 1.
LaurentPoly torus_alexander(long long p, long long q);

// Satellite formula for a cable with winding m and linking number c:
// torus_alexander(m, c) * deltaC(t^m), normalized. Requires gcd(m, c) = 1.
LaurentPoly cable_alexander(const LaurentPoly& delta_companion, long long m,
                            long long c);

}  // namespace braidforge
