#pragma once

// Deterministic random braid words and random applicable moves for the
// property tests.

#include <cstdlib>
#include <random>
#include <vector>

#include "core/braid.hpp"

namespace testsupport {

inline braidforge::BraidWord random_word(std::mt19937& rng, int max_strands,
                                         int max_letters) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  int n = strands_dist(rng);
  std::uniform_int_distribution<int> len_dist(0, max_letters);
  int len = len_dist(rng);
  std::uniform_int_distribution<int> index_dist(1, n - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<int> letters;
  letters.reserve(len);
  for (int i = 0; i < len; ++i)
    letters.push_back(index_dist(rng) * (sign_dist(rng) ? 1 : -1));
  return braidforge::make_braid(n, std::move(letters));
}

// Picks uniformly among the moves applicable to w, never mirror. Strand
// growth from stabilization is capped so Jones stays cheap.
inline braidforge::Move random_nonmirror_move(std::mt19937& rng,
                                              const braidforge::BraidWord& w,
                                              int strand_cap) {
  using braidforge::Move;
  const std::vector<int>& ls = w.letters();
  int len = static_cast<int>(ls.size());
  std::vector<Move> candidates;
  candidates.push_back({Move::Kind::flip, 0, 0});
  candidates.push_back({Move::Kind::reverse, 0, 0});
  if (len > 0) {
    std::uniform_int_distribution<int> rot(1, len);
    candidates.push_back({Move::Kind::conjugate_cyclic, 0, rot(rng)});
  }
  if (w.strands() < strand_cap) {
    std::uniform_int_distribution<int> sign(0, 1);
    candidates.push_back({Move::Kind::stabilize, 0, sign(rng) ? 1 : -1});
  }
  for (int pos = 0; pos + 1 < len; ++pos) {
    if (ls[pos] == -ls[pos + 1])
      candidates.push_back({Move::Kind::free_cancel, pos, 0});
    if (std::abs(std::abs(ls[pos]) - std::abs(ls[pos + 1])) >= 2)
      candidates.push_back({Move::Kind::braid_relation_far, pos, 0});
  }
  for (int pos = 0; pos + 2 < len; ++pos)
    if (ls[pos] == ls[pos + 2] &&
        std::abs(std::abs(ls[pos]) - std::abs(ls[pos + 1])) == 1 &&
        (ls[pos] > 0) == (ls[pos + 1] > 0))
      candidates.push_back({Move::Kind::braid_relation_near, pos, 0});
  if (len > 0 && w.strands() >= 2 &&
      std::abs(ls.back()) == w.strands() - 1) {
    int count = 0;
    for (int e : ls)
      if (std::abs(e) == w.strands() - 1) ++count;
    if (count == 1) candidates.push_back({Move::Kind::destabilize, 0, 0});
  }
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

}  // namespace testsupport
