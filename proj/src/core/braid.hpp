#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidforge {

// Permutation of {0..n-1}. images[i] is where the strand entering at bottom
// position i exits at the top.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  int cycle_count() const;
  // (a then b): result.images[i] = b.images[a.images[i]].
  Permutation then(const Permutation& b) const;
  bool operator==(const Permutation&) const = default;
};

// A braid word: strand count plus signed generator letters. Letter e means
// sigma_{|e|} with crossing sign sgn(e); 1 <= |e| <= strands-1. Values are
// immutable once built.
class BraidWord {
 public:
  BraidWord() : strands_(1) {}

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  long long crossing_count() const {
    return static_cast<long long>(letters_.size());
  }
  bool all_positive() const;

  std::string format() const;  // "n: e1 e2 ...", canonical whitespace

  bool operator==(const BraidWord&) const = default;

 private:
  friend BraidWord make_braid(int, std::vector<int>);
  int strands_;
  std::vector<int> letters_;
};

// Validates and builds a word; no normalization is performed.
BraidWord make_braid(int strands, std::vector<int> letters);

// Parses the braid text format "n: e1 e2 ...". Empty letter list allowed.
BraidWord parse_braid_text(std::string_view text);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord mirror(const BraidWord& w);    // negate all letters
BraidWord reverse(const BraidWord& w);   // reverse the sequence
BraidWord flip(const BraidWord& w);      // letter +-i -> +-(n-i)

// Bottom of the braid acts first: the word's first letter is applied first.
Permutation permutation_of(const BraidWord& w);
int component_count(const BraidWord& w);
long long exponent_sum(const BraidWord& w);

// Closure-preserving rewriting moves (mirror excepted).
struct Move {
  enum class Kind {
    free_cancel,          // pos: letters[pos] == -letters[pos+1], drop both
    braid_relation_far,   // pos: commute distant generators
    braid_relation_near,  // pos: (a,b,a) -> (b,a,b), adjacent indices
    conjugate_cyclic,     // arg: rotate letters left by arg
    stabilize,            // arg: +1/-1, append letter +-(n) on n+1 strands
    destabilize,          // last letter +-(n-1), its index unique in the word
    flip,
    mirror,
    reverse,
  };
  Kind kind = Kind::conjugate_cyclic;
  int pos = 0;
  int arg = 0;
};

const char* move_kind_name(Move::Kind kind);
BraidWord apply_move(const BraidWord& w, const Move& m);

}  // namespace braidforge
