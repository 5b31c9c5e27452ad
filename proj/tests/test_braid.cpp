#include "core/braid.hpp"

#include <random>

#include "core/errors.hpp"
#include "doctest.h"
#include "support/random_words.hpp"

using namespace braidforge;

TEST_CASE("make_braid validates letters") {
  BraidWord trefoil = make_braid(2, {1, 1, 1});
  CHECK(trefoil.strands() == 2);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(make_braid(1, {}).strands() == 1);
  CHECK_THROWS_WITH_AS(make_braid(3, {2, -3}),
                       "letter -3 out of range for 3 strands (index 1)",
                       ValidationError);
  CHECK_THROWS_AS(make_braid(0, {}), ValidationError);
  CHECK_THROWS_AS(make_braid(2, {0}), ValidationError);
}

TEST_CASE("braid text round trip") {
  BraidWord w = make_braid(3, {1, -2, 1});
  CHECK(w.format() == "3: 1 -2 1");
  CHECK(parse_braid_text(w.format()) == w);
  CHECK(parse_braid_text("3:") == make_braid(3, {}));
  CHECK(parse_braid_text("  2 :  1\t1 1 ") == make_braid(2, {1, 1, 1}));
  CHECK(parse_braid_text("3:").format() == "3:");
  CHECK_THROWS_AS(parse_braid_text("3: 5"), ParseError);
  CHECK_THROWS_AS(parse_braid_text("x: 1"), ParseError);
  CHECK_THROWS_AS(parse_braid_text("3 1 1"), ParseError);
  try {
    parse_braid_text("3: 1 4");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("compose concatenates, checks strand counts") {
  BraidWord s1 = make_braid(2, {1});
  CHECK(compose(s1, s1) == make_braid(2, {1, 1}));
  CHECK(compose(s1, make_braid(2, {})) == s1);
  CHECK(compose(make_braid(2, {}), s1) == s1);
  CHECK_THROWS_AS(compose(s1, make_braid(3, {1})), ValidationError);
}

TEST_CASE("compose is associative; inverse is an involution") {
  std::mt19937 rng2(5);
  for (int i = 0; i < 100; ++i) {
    int n = 4;
    auto gen = [&](int len) {
      std::uniform_int_distribution<int> idx(1, n - 1), sign(0, 1);
      std::vector<int> ls;
      for (int j = 0; j < len; ++j)
        ls.push_back(idx(rng2) * (sign(rng2) ? 1 : -1));
      return make_braid(n, ls);
    };
    BraidWord a = gen(5), b = gen(4), c = gen(3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(inverse(inverse(a)) == a);
    CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
    CHECK(exponent_sum(inverse(a)) == -exponent_sum(a));
  }
}

TEST_CASE("inverse reverses and negates") {
  CHECK(inverse(make_braid(3, {1, 2})) == make_braid(3, {-2, -1}));
  CHECK(inverse(make_braid(3, {})) == make_braid(3, {}));
  CHECK(inverse(make_braid(2, {-1})) == make_braid(2, {1}));
}

TEST_CASE("permutations: convention and homomorphism") {
  // bottom acts first: images[i] is the exit of the strand entering at i
  Permutation p = permutation_of(make_braid(2, {1}));
  CHECK(p.images == std::vector<int>{1, 0});
  CHECK(permutation_of(make_braid(4, {})).is_identity());

  // (s1 s2 s3)^2 on 4 strands has gcd(4,2) = 2 cycles
  BraidWord sq = make_braid(4, {1, 2, 3, 1, 2, 3});
  CHECK(permutation_of(sq).cycle_count() == 2);

  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    int n = 5;
    std::uniform_int_distribution<int> idx(1, n - 1), sign(0, 1), len(0, 6);
    auto gen = [&]() {
      std::vector<int> ls;
      int L = len(rng);
      for (int j = 0; j < L; ++j)
        ls.push_back(idx(rng) * (sign(rng) ? 1 : -1));
      return make_braid(n, ls);
    };
    BraidWord a = gen(), b = gen();
    CHECK(permutation_of(compose(a, b)) ==
          permutation_of(a).then(permutation_of(b)));
  }
}

TEST_CASE("component counts") {
  CHECK(component_count(make_braid(4, {})) == 4);
  CHECK(component_count(make_braid(4, {1, 2, 3, 1, 2, 3})) == 2);  // T(4,2)
  CHECK(component_count(make_braid(2, {1, 1, 1})) == 1);
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(make_braid(2, {1, 1, 1})) == 3);
  CHECK(exponent_sum(make_braid(3, {1, -2})) == 0);
  BraidWord t5421 = make_braid(
      5, {1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 1, 1});
  CHECK(exponent_sum(t5421) == 18);
}

TEST_CASE("moves: examples and error paths") {
  CHECK(apply_move(make_braid(2, {1, -1}),
                   {Move::Kind::free_cancel, 0, 0}) == make_braid(2, {}));
  CHECK(apply_move(make_braid(3, {1, 2, 1}),
                   {Move::Kind::braid_relation_near, 0, 0}) ==
        make_braid(3, {2, 1, 2}));
  CHECK(apply_move(make_braid(2, {1}), {Move::Kind::destabilize, 0, 0}) ==
        make_braid(1, {}));
  CHECK(apply_move(make_braid(4, {1, 3}),
                   {Move::Kind::braid_relation_far, 0, 0}) ==
        make_braid(4, {3, 1}));
  CHECK(apply_move(make_braid(3, {1, 2}),
                   {Move::Kind::conjugate_cyclic, 0, 1}) ==
        make_braid(3, {2, 1}));
  CHECK(apply_move(make_braid(2, {1}), {Move::Kind::stabilize, 0, 1}) ==
        make_braid(3, {1, 2}));
  CHECK(apply_move(make_braid(3, {1, 2}), {Move::Kind::flip, 0, 0}) ==
        make_braid(3, {2, 1}));
  CHECK(apply_move(make_braid(3, {1, -2}), {Move::Kind::mirror, 0, 0}) ==
        make_braid(3, {-1, 2}));
  CHECK(apply_move(make_braid(3, {1, -2}), {Move::Kind::reverse, 0, 0}) ==
        make_braid(3, {-2, 1}));

  CHECK_THROWS_AS(apply_move(make_braid(2, {1, 1}),
                             {Move::Kind::free_cancel, 0, 0}),
                  ValidationError);
  CHECK_THROWS_AS(apply_move(make_braid(3, {1, 2}),
                             {Move::Kind::braid_relation_far, 0, 0}),
                  ValidationError);
  // destabilize needs the removable index to occur exactly once
  CHECK_THROWS_AS(apply_move(make_braid(3, {2, 1, 2}),
                             {Move::Kind::destabilize, 0, 0}),
                  ValidationError);
  CHECK_THROWS_AS(apply_move(make_braid(3, {2, 1}),
                             {Move::Kind::destabilize, 0, 0}),
                  ValidationError);
}

TEST_CASE("flip and mirror are involutions") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    BraidWord w = testsupport::random_word(rng, 5, 10);
    CHECK(flip(flip(w)) == w);
    CHECK(mirror(mirror(w)) == w);
    CHECK(reverse(reverse(w)) == w);
  }
}
