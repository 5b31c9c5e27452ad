#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core/braid.hpp"

namespace braidforge {

// Generalised twisted torus link parameters: strictly decreasing r_i > 1,
// all s_i > 0. The braid stacks the largest block first.
struct KLinkSpec {
  std::vector<std::pair<int, int>> pairs;  // (r_i, s_i)
  std::string to_text() const;             // "klink r1,s1 r2,s2 ..."
};

// Same data, strictly increasing r_i, smallest block stacked first.
struct TLinkSpec {
  std::vector<std::pair<int, int>> pairs;
  std::string to_text() const;
};

struct TwistedTorusSpec {
  int p = 2, q = 2, r = 2, s = 1;
  std::string to_text() const;  // "ttk p q r s"
};

struct TorusPair {
  int p = 2, q = 1;
};

// Cable parameters: the pattern runs m times along the companion and links
// its core c times (zero-framing convention, c = lk(cable, companion)).
struct CableSpec {
  std::variant<BraidWord, KLinkSpec, TorusPair> companion;
  int winding = 1;          // m
  long long surgery = 0;    // c

  BraidWord companion_braid() const;
  std::string to_text() const;  // "cable (<companion spec>) m j"
};

enum class SpecMode { strict, relaxed };

// (sigma_1...sigma_{p-1})^q on p strands.
BraidWord torus_braid(int p, int q);

// (sigma_1...sigma_{p-1})^q followed by |rs| copies of the r-strand block;
// the block is inverted letterwise for s < 0.
BraidWord twisted_torus_braid(const TwistedTorusSpec& spec);
BraidWord twisted_torus_braid(int p, int q, int r, int s);

// Relaxed mode skips the ordering constraints (r_i >= 2, s_i >= 1 are always
// required); the strand count is the largest r_i.
BraidWord klink_braid(const KLinkSpec& spec, SpecMode mode = SpecMode::strict);
BraidWord tlink_braid(const TLinkSpec& spec);

// Half twist on k strands; sign +1 gives (1..k-1)(1..k-2)...(1), sign -1 the
// inverted stacked form (-(k-1)..-1)(-(k-1)..-2)...(-(k-1)).
BraidWord half_twist(int k, int sign);

// Replaces every strand by m parallel strands and every letter by an
// m^2-letter block transposition, then appends (sigma_1..sigma_{m-1})^j on
// the first m strands (inverted for j < 0). The closure is the cable of the
// companion's closure with winding m and linking number m*e + j, where e is
// the companion's exponent sum.
BraidWord cable_braid(const BraidWord& companion, int m, long long j);

// K-form of the twisted torus knot T(p, q; p-1, -1). Requires k := p-2q >= 2,
// k | p-2 and a := (p-2)/k odd; then b = (q-1)/k and a = 2b+1.
KLinkSpec lemma_symmetry_klink(int p, int q);

struct Theorem5Specs {
  TwistedTorusSpec ttk;   // T(p, q; p-1, -1) with p = ka+2, q = kb+1
  KLinkSpec companion;    // K((a,2),(a-1,1),...,(b+2,1),(b,1),...,(2,1))
  CableSpec cable;        // winding k, linking number k*a*(b+1)+1
};
Theorem5Specs theorem5_specs(int k, int b);

struct MorimotoFamily {
  TwistedTorusSpec ttk;
  long long p_minus_r = 0;
};
MorimotoFamily morimoto_family(long long e, long long k1, long long k2,
                               long long x1, long long x2);

// Parses the family spec text formats:
//   torus p q | ttk p q r s | klink r1,s1 ... | tlink r1,s1 ... |
//   cable (<companion spec>) m j | halftwist k +|- | braid <n>: <letters> |
//   lemmasym p q | t5 k b | morimoto e k1 k2 x1 x2
BraidWord build_family(std::string_view spec, SpecMode mode = SpecMode::strict);

}  // namespace braidforge
