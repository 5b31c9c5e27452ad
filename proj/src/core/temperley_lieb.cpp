#include "core/temperley_lieb.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "core/errors.hpp"

namespace braidforge {

namespace {

// The basis of TL_n is the set of noncrossing perfect matchings of 2n points
// on a circle: bottom strand j is point j (left to right), top strand j is
// point 2n-1-j. A matching is encoded by its mate array and, for indexing,
// by the Dyck word read along points 0..2n-1 ('open' when mate is ahead).
// Diagrams are ranked in lexicographic Dyck order with 'open' sorting first;
// this enumeration is stable and documented here as the canonical order.
struct TLBasis {
  int n;
  int points;
  long long size;
  // paths[pos][h]: completions of a prefix at position pos, height h.
  std::vector<std::vector<long long>> paths;

  explicit TLBasis(int n_in) : n(n_in), points(2 * n_in) {
    paths.assign(points + 1, std::vector<long long>(n + 2, 0));
    paths[points][0] = 1;
    for (int pos = points; pos-- > 0;)
      for (int h = 0; h <= n; ++h) {
        long long total = 0;
        if (h + 1 <= n) total += paths[pos + 1][h + 1];
        if (h > 0) total += paths[pos + 1][h - 1];
        paths[pos][h] = total;
      }
    size = paths[0][0];
  }

  long long rank(const std::vector<int>& mate) const {
    long long r = 0;
    int h = 0;
    for (int pos = 0; pos < points; ++pos) {
      if (mate[pos] > pos) {
        ++h;
      } else {
        // 'close' here; count the lexicographically smaller completions that
        // 'open' instead.
        if (h + 1 <= n) r += paths[pos + 1][h + 1];
        --h;
      }
    }
    return r;
  }

  std::vector<int> unrank(long long r) const {
    std::vector<int> mate(points);
    std::vector<int> stack;
    int h = 0;
    for (int pos = 0; pos < points; ++pos) {
      long long with_open = h + 1 <= n ? paths[pos + 1][h + 1] : 0;
      bool open = false;
      if (h > 0) {
        if (r < with_open)
          open = true;
        else
          r -= with_open;
      } else {
        open = true;
      }
      if (open) {
        stack.push_back(pos);
        ++h;
      } else {
        int partner = stack.back();
        stack.pop_back();
        mate[pos] = partner;
        mate[partner] = pos;
        --h;
      }
    }
    return mate;
  }
};

// Per-strand-count tables: the e_i action (target diagram and whether a loop
// closed) and the loop count of each diagram's closure.
struct TLData {
  TLBasis basis;
  std::vector<std::uint8_t> closure_loops;
  // action[i-1] built lazily per generator, guarded for concurrent callers.
  std::mutex build_mutex;
  std::vector<std::vector<std::int64_t>> target;
  std::vector<std::vector<std::uint8_t>> loop;

  explicit TLData(int n) : basis(n) {
    closure_loops.resize(basis.size);
    std::vector<int> mate;
    std::vector<bool> seen(basis.points);
    for (long long d = 0; d < basis.size; ++d) {
      mate = basis.unrank(d);
      std::fill(seen.begin(), seen.end(), false);
      int loops = 0;
      for (int start = 0; start < basis.points; ++start) {
        if (seen[start]) continue;
        ++loops;
        int at = start;
        while (!seen[at]) {
          seen[at] = true;
          int via = mate[at];
          seen[via] = true;
          at = basis.points - 1 - via;  // closure arc joins strand ends
        }
      }
      closure_loops[d] = static_cast<std::uint8_t>(loops);
    }
    target.resize(n - 1 >= 0 ? n - 1 : 0);
    loop.resize(target.size());
  }

  // Composing e_i on top of diagram D caps D's top strands i-1 and i and
  // exposes a fresh cup; a loop closes exactly when those tops were mated.
  void ensure_generator(int i) {
    std::lock_guard<std::mutex> guard(build_mutex);
    auto& tgt = target[i - 1];
    if (!tgt.empty()) return;
    auto& lp = loop[i - 1];
    tgt.resize(basis.size);
    lp.resize(basis.size);
    int n = basis.n;
    int ta = 2 * n - 1 - (i - 1);  // top point of strand i-1
    int tb = 2 * n - 1 - i;        // top point of strand i
    std::vector<int> mate;
    for (long long d = 0; d < basis.size; ++d) {
      mate = basis.unrank(d);
      int ma = mate[ta], mb = mate[tb];
      if (ma == tb) {
        tgt[d] = d;
        lp[d] = 1;
        continue;
      }
      mate[ma] = mb;
      mate[mb] = ma;
      mate[ta] = tb;
      mate[tb] = ta;
      tgt[d] = basis.rank(mate);
      lp[d] = 0;
    }
  }
};

TLData& tl_data(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::unique_ptr<TLData>> cache;
  std::lock_guard<std::mutex> guard(cache_mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<TLData>(n)).first;
  return *it->second;
}

}  // namespace

JonesLimits JonesLimits::from_env() {
  JonesLimits limits;
  if (const char* s = std::getenv("BRAIDFORGE_JONES_MAX_STRANDS"))
    limits.max_strands = std::atoi(s);
  if (const char* s = std::getenv("BRAIDFORGE_JONES_MAX_CROSSINGS"))
    limits.max_crossings = std::atoll(s);
  return limits;
}

LaurentPoly jones(const BraidWord& w, const JonesLimits& limits) {
  int n = w.strands();
  if (n > limits.max_strands)
    throw ResourceError(
        "Jones limit exceeded: " + std::to_string(n) + " strands > cap " +
        std::to_string(limits.max_strands) +
        "; raise the cap or compare Alexander polynomials only");
  if (w.crossing_count() > limits.max_crossings)
    throw ResourceError(
        "Jones limit exceeded: " + std::to_string(w.crossing_count()) +
        " crossings > cap " + std::to_string(limits.max_crossings) +
        "; raise the cap or compare Alexander polynomials only");
  // Catalan(15) is ~9.7M diagrams; beyond 14 strands the basis no longer
  // fits sensible memory no matter what the caller configured.
  if (n > 14)
    throw ResourceError(
        "Temperley-Lieb basis beyond 14 strands is not supported");

  // delta = -A^2 - A^-2 in A-exponents.
  const LaurentPoly delta =
      LaurentPoly::from_terms({{2, -1}, {-2, -1}});

  TLData& data = tl_data(n);
  long long dim = data.basis.size;

  std::vector<LaurentPoly> vec(dim);
  std::vector<int> identity_mate(2 * n);
  for (int j = 0; j < n; ++j) {
    identity_mate[j] = 2 * n - 1 - j;
    identity_mate[2 * n - 1 - j] = j;
  }
  vec[data.basis.rank(identity_mate)] = LaurentPoly::one();

  std::vector<LaurentPoly> next(dim);
  for (int e : w.letters()) {
    int i = std::abs(e);
    int s = e > 0 ? 1 : -1;
    data.ensure_generator(i);
    const auto& tgt = data.target[i - 1];
    const auto& lp = data.loop[i - 1];
    for (auto& cell : next) cell = LaurentPoly::zero();
    for (long long d = 0; d < dim; ++d) {
      const LaurentPoly& c = vec[d];
      if (c.is_zero()) continue;
      next[d].add_scaled(c, 1, s);
      if (lp[d]) {
        next[tgt[d]].add_scaled(c, -1, -s + 2);
        next[tgt[d]].add_scaled(c, -1, -s - 2);
      } else {
        next[tgt[d]].add_scaled(c, 1, -s);
      }
    }
    vec.swap(next);
  }

  // Markov closure: weight each diagram by delta^(loops-1).
  std::vector<LaurentPoly> delta_pow(n + 1);
  delta_pow[0] = LaurentPoly::one();
  for (int k = 1; k <= n; ++k) delta_pow[k] = delta_pow[k - 1] * delta;
  LaurentPoly bracket;
  for (long long d = 0; d < dim; ++d) {
    if (vec[d].is_zero()) continue;
    bracket = bracket + vec[d] * delta_pow[data.closure_loops[d] - 1];
  }

  // Writhe correction (-A^3)^(-w), then exponents flipped to quarter powers
  // of t via t = A^-4 (one quarter-t unit per inverse A unit).
  long long writhe = exponent_sum(w);
  long long shift = -3 * writhe;
  if (shift > INT32_MAX || shift < INT32_MIN)
    throw OverflowError("writhe correction exponent overflow");
  LaurentPoly corrected;
  corrected.add_scaled(bracket, writhe % 2 == 0 ? 1 : -1,
                       static_cast<int>(shift));
  LaurentPoly result = corrected.substituted(-1);

  // Knot closures must land on integral powers of t.
  if (component_count(w) == 1)
    for (const auto& [exp, coeff] : result.terms())
      if (exp % 4 != 0)
        throw InternalError("Jones of a knot produced a fractional exponent");
  return result;
}

}  // namespace braidforge
