#include <random>

#include "core/braid.hpp"
#include "core/invariants.hpp"
#include "doctest.h"
#include "support/random_words.hpp"

using namespace braidforge;

// Fingerprints survive every non-mirror move. Kept at a few dozen words
// here; the acceptance suite runs the full 500-word version.
TEST_CASE("non-mirror moves preserve the fingerprint") {
  std::mt19937 rng(101);
  JonesLimits limits;
  limits.max_strands = 8;
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord w = testsupport::random_word(rng, 5, 12);
    InvariantFingerprint base = fingerprint(w, limits);
    BraidWord current = w;
    for (int step = 0; step < 10; ++step) {
      Move m = testsupport::random_nonmirror_move(rng, current, 6);
      current = apply_move(current, m);
      InvariantFingerprint moved = fingerprint(current, limits);
      REQUIRE_MESSAGE(fingerprint_equal(base, moved),
                      "move " << move_kind_name(m.kind) << " changed "
                              << w.format() << " -> " << current.format());
    }
  }
}

TEST_CASE("mirror does change chiral fingerprints") {
  BraidWord trefoil = make_braid(2, {1, 1, 1});
  InvariantFingerprint a = fingerprint(trefoil);
  InvariantFingerprint b = fingerprint(mirror(trefoil));
  CHECK_FALSE(fingerprint_equal(a, b));
}
