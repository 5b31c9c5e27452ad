#include "core/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace braidforge {

namespace {

void append_run(std::vector<int>& letters, int first, int last) {
  // ascending run sigma_first .. sigma_last (inclusive); empty when last<first
  for (int i = first; i <= last; ++i) letters.push_back(i);
}

void append_run_inverse(std::vector<int>& letters, int first, int last) {
  // descending inverse run sigma_last^-1 .. sigma_first^-1
  for (int i = last; i >= first; --i) letters.push_back(-i);
}

}  // namespace

std::string KLinkSpec::to_text() const {
  std::ostringstream out;
  out << "klink";
  for (const auto& [r, s] : pairs) out << " " << r << "," << s;
  return out.str();
}

std::string TLinkSpec::to_text() const {
  std::ostringstream out;
  out << "tlink";
  for (const auto& [r, s] : pairs) out << " " << r << "," << s;
  return out.str();
}

std::string TwistedTorusSpec::to_text() const {
  std::ostringstream out;
  out << "ttk " << p << " " << q << " " << r << " " << s;
  return out.str();
}

BraidWord CableSpec::companion_braid() const {
  if (const BraidWord* w = std::get_if<BraidWord>(&companion)) return *w;
  if (const KLinkSpec* k = std::get_if<KLinkSpec>(&companion))
    return klink_braid(*k);
  const TorusPair& t = std::get<TorusPair>(companion);
  return torus_braid(t.p, t.q);
}

std::string CableSpec::to_text() const {
  BraidWord comp = companion_braid();
  long long j = surgery - static_cast<long long>(winding) * exponent_sum(comp);
  std::string inner;
  if (const KLinkSpec* k = std::get_if<KLinkSpec>(&companion))
    inner = k->to_text();
  else if (const TorusPair* t = std::get_if<TorusPair>(&companion))
    inner = "torus " + std::to_string(t->p) + " " + std::to_string(t->q);
  else
    inner = "braid " + comp.format();
  return "cable (" + inner + ") " + std::to_string(winding) + " " +
         std::to_string(j);
}

BraidWord torus_braid(int p, int q) {
  if (p < 2) throw ValidationError("torus braid needs p >= 2");
  if (q < 1) throw ValidationError("torus braid needs q >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(q) * (p - 1));
  for (int rep = 0; rep < q; ++rep) append_run(letters, 1, p - 1);
  return make_braid(p, std::move(letters));
}

BraidWord twisted_torus_braid(const TwistedTorusSpec& spec) {
  const auto [p, q, r, s] = spec;
  if (q < 2 || q >= p)
    throw ValidationError("twisted torus knot needs 2 <= q < p");
  if (r < 2 || r > p)
    throw ValidationError("twisted torus knot needs 2 <= r <= p");
  if (s == 0) throw ValidationError("twisted torus knot needs s != 0");
  std::vector<int> letters;
  long long reps = static_cast<long long>(r) * (s > 0 ? s : -s);
  letters.reserve(static_cast<std::size_t>(q) * (p - 1) +
                  static_cast<std::size_t>(reps) * (r - 1));
  for (int rep = 0; rep < q; ++rep) append_run(letters, 1, p - 1);
  for (long long rep = 0; rep < reps; ++rep) {
    if (s > 0)
      append_run(letters, 1, r - 1);
    else
      append_run_inverse(letters, 1, r - 1);
  }
  return make_braid(p, std::move(letters));
}

BraidWord twisted_torus_braid(int p, int q, int r, int s) {
  return twisted_torus_braid(TwistedTorusSpec{p, q, r, s});
}

BraidWord klink_braid(const KLinkSpec& spec, SpecMode mode) {
  if (spec.pairs.empty())
    throw ValidationError("K-link spec needs at least one (r, s) pair");
  int strands = 0;
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const auto [r, s] = spec.pairs[i];
    if (r <= 1)
      throw ValidationError("K-link r values must exceed 1, got r=" +
                            std::to_string(r));
    if (s <= 0)
      throw ValidationError("K-link s values must be positive, got s=" +
                            std::to_string(s));
    if (mode == SpecMode::strict && i > 0 && spec.pairs[i - 1].first <= r)
      throw ValidationError("K-link r values must strictly decrease (" +
                            std::to_string(spec.pairs[i - 1].first) +
                            " then " + std::to_string(r) + ")");
    strands = std::max(strands, r);
  }
  std::vector<int> letters;
  for (const auto& [r, s] : spec.pairs)
    for (int rep = 0; rep < s; ++rep) append_run(letters, 1, r - 1);
  return make_braid(strands, std::move(letters));
}

BraidWord tlink_braid(const TLinkSpec& spec) {
  if (spec.pairs.empty())
    throw ValidationError("T-link spec needs at least one (r, s) pair");
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const auto [r, s] = spec.pairs[i];
    if (r <= 1)
      throw ValidationError("T-link r values must exceed 1, got r=" +
                            std::to_string(r));
    if (s <= 0)
      throw ValidationError("T-link s values must be positive, got s=" +
                            std::to_string(s));
    if (i > 0 && spec.pairs[i - 1].first >= r)
      throw ValidationError("T-link r values must strictly increase");
  }
  int strands = spec.pairs.back().first;
  std::vector<int> letters;
  for (const auto& [r, s] : spec.pairs)
    for (int rep = 0; rep < s; ++rep) append_run(letters, 1, r - 1);
  return make_braid(strands, std::move(letters));
}

BraidWord half_twist(int k, int sign) {
  if (k < 2) throw ValidationError("half twist needs k >= 2");
  if (sign != 1 && sign != -1)
    throw ValidationError("half twist sign must be +1 or -1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
  if (sign > 0) {
    for (int top = k - 1; top >= 1; --top) append_run(letters, 1, top);
  } else {
    for (int low = 1; low <= k - 1; ++low) append_run_inverse(letters, low, k - 1);
  }
  return make_braid(k, std::move(letters));
}

BraidWord cable_braid(const BraidWord& companion, int m, long long j) {
  if (m < 1) throw ValidationError("cable winding must be at least 1");
  if (component_count(companion) != 1)
    throw ValidationError("cable companion must present a knot, closure has " +
                          std::to_string(component_count(companion)) +
                          " components");
  if (m == 1) return companion;
  int n = companion.strands();
  std::vector<int> letters;
  letters.reserve(companion.letters().size() * static_cast<std::size_t>(m) * m +
                  static_cast<std::size_t>(j > 0 ? j : -j) * (m - 1));
  for (int e : companion.letters()) {
    int i = std::abs(e);
    int base = (i - 1) * m;
    // Block transposition of bundles i and i+1: rows r = 0..m-1, row r being
    // the ascending run starting at base + m - r, m letters long.
    std::vector<int> block;
    block.reserve(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r)
      append_run(block, base + m - r, base + 2 * m - r - 1);
    if (e > 0) {
      letters.insert(letters.end(), block.begin(), block.end());
    } else {
      for (auto it = block.rbegin(); it != block.rend(); ++it)
        letters.push_back(-*it);
    }
  }
  long long reps = j > 0 ? j : -j;
  for (long long rep = 0; rep < reps; ++rep) {
    if (j > 0)
      append_run(letters, 1, m - 1);
    else
      append_run_inverse(letters, 1, m - 1);
  }
  return make_braid(n * m, std::move(letters));
}

KLinkSpec lemma_symmetry_klink(int p, int q) {
  if (q < 2 || q >= p)
    throw ValidationError("needs 2 <= q < p");
  int k = p - 2 * q;
  if (k < 2)
    throw ValidationError("k = p - 2q = " + std::to_string(k) +
                          " violates k >= 2");
  if ((p - 2) % k != 0)
    throw ValidationError("k = " + std::to_string(k) + " does not divide p-2 = " +
                          std::to_string(p - 2));
  int a = (p - 2) / k;
  if (a % 2 == 0)
    throw ValidationError("a = (p-2)/k = " + std::to_string(a) +
                          " must be odd");
  int b = (a - 1) / 2;  // equals (q-1)/k
  if (b * k != q - 1)
    throw InternalError("derived b inconsistent with q");
  KLinkSpec spec;
  spec.pairs.push_back({p - 1, k});
  for (int r = k * a; r >= k * (1 + b) + 1; --r) spec.pairs.push_back({r, 1});
  for (int r = k * b; r >= 2; --r) spec.pairs.push_back({r, 1});
  return spec;
}

Theorem5Specs theorem5_specs(int k, int b) {
  if (k < 2) throw ValidationError("needs k >= 2");
  if (b < 1) throw ValidationError("needs b >= 1");
  int a = 2 * b + 1;
  long long p_ll = static_cast<long long>(k) * a + 2;
  if (p_ll > 1'000'000) throw ValidationError("parameters too large");
  int p = static_cast<int>(p_ll);
  int q = k * b + 1;
  Theorem5Specs out;
  out.ttk = TwistedTorusSpec{p, q, p - 1, -1};
  out.companion.pairs.push_back({a, 2});
  for (int r = a - 1; r >= b + 2; --r) out.companion.pairs.push_back({r, 1});
  for (int r = b; r >= 2; --r) out.companion.pairs.push_back({r, 1});
  out.cable.companion = out.companion;
  out.cable.winding = k;
  out.cable.surgery = static_cast<long long>(k) * a * (b + 1) + 1;
  return out;
}

MorimotoFamily morimoto_family(long long e, long long k1, long long k2,
                               long long x1, long long x2) {
  if (e <= 0) throw ValidationError("needs e > 0");
  if (k1 <= 1) throw ValidationError("needs k1 > 1");
  if (k2 <= 1) throw ValidationError("needs k2 > 1");
  if (x1 <= 0 || x2 <= 0) throw ValidationError("needs x1, x2 > 0");
  long long g = std::gcd(x1, x2);
  if (g != 1) throw ValidationError("needs gcd(x1, x2) = 1");
  long long m = k1 + k2 - 1;
  long long p = ((e + 1) * m + 1) * x1 + (e + 1) * x2;
  long long q = (e * m + 1) * x1 + e * x2;
  long long r = ((e + 1) * m - k1 + 2) * x1 + e * x2;
  if (p > 1'000'000) throw ValidationError("parameters too large");
  MorimotoFamily out;
  out.ttk = TwistedTorusSpec{static_cast<int>(p), static_cast<int>(q),
                             static_cast<int>(r), -1};
  out.p_minus_r = (k1 - 1) * x1 + x2;
  return out;
}

namespace {

struct Tokenizer {
  std::vector<std::string> tokens;

  explicit Tokenizer(std::string_view text) {
    std::string cur;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      } else if (c == '(' || c == ')') {
        if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        tokens.push_back(std::string(1, c));
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  }
};

long long parse_int_token(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("expected ") + what + ", got '" + tok +
                          "'");
  }
}

std::vector<std::pair<int, int>> parse_pairs(
    const std::vector<std::string>& toks, std::size_t from, std::size_t to) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = from; i < to; ++i) {
    const std::string& tok = toks[i];
    std::size_t comma = tok.find(',');
    if (comma == std::string::npos)
      throw ValidationError("expected r,s pair, got '" + tok + "'");
    long long r = parse_int_token(tok.substr(0, comma), "r");
    long long s = parse_int_token(tok.substr(comma + 1), "s");
    pairs.push_back({static_cast<int>(r), static_cast<int>(s)});
  }
  if (pairs.empty()) throw ValidationError("expected at least one r,s pair");
  return pairs;
}

BraidWord build_family_tokens(const std::vector<std::string>& toks,
                              std::size_t from, std::size_t to, SpecMode mode);

BraidWord build_cable_tokens(const std::vector<std::string>& toks,
                             std::size_t from, std::size_t to, SpecMode mode) {
  if (from >= to || toks[from] != "(")
    throw ValidationError("cable spec needs a parenthesised companion");
  int depth = 0;
  std::size_t close = from;
  for (std::size_t i = from; i < to; ++i) {
    if (toks[i] == "(") ++depth;
    if (toks[i] == ")" && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == from) throw ValidationError("unbalanced parentheses in cable spec");
  if (to - close != 3)
    throw ValidationError("cable spec needs 'cable (<companion>) m j'");
  BraidWord companion = build_family_tokens(toks, from + 1, close, mode);
  long long m = parse_int_token(toks[close + 1], "m");
  long long j = parse_int_token(toks[close + 2], "j");
  if (m < 1 || m > 64) throw ValidationError("cable winding out of range");
  return cable_braid(companion, static_cast<int>(m), j);
}

BraidWord build_family_tokens(const std::vector<std::string>& toks,
                              std::size_t from, std::size_t to, SpecMode mode) {
  if (from >= to) throw ValidationError("empty family spec");
  const std::string& kind = toks[from];
  std::size_t argc = to - from - 1;
  auto arg = [&](std::size_t i, const char* what) {
    return parse_int_token(toks[from + 1 + i], what);
  };
  auto need = [&](std::size_t n, const char* usage) {
    if (argc != n)
      throw ValidationError(std::string("usage: ") + usage);
  };
  if (kind == "torus") {
    need(2, "torus p q");
    return torus_braid(static_cast<int>(arg(0, "p")), static_cast<int>(arg(1, "q")));
  }
  if (kind == "ttk") {
    need(4, "ttk p q r s");
    return twisted_torus_braid(static_cast<int>(arg(0, "p")),
                               static_cast<int>(arg(1, "q")),
                               static_cast<int>(arg(2, "r")),
                               static_cast<int>(arg(3, "s")));
  }
  if (kind == "klink")
    return klink_braid(KLinkSpec{parse_pairs(toks, from + 1, to)}, mode);
  if (kind == "tlink")
    return tlink_braid(TLinkSpec{parse_pairs(toks, from + 1, to)});
  if (kind == "cable") return build_cable_tokens(toks, from + 1, to, mode);
  if (kind == "halftwist") {
    need(2, "halftwist k +|-");
    const std::string& s = toks[from + 2];
    int sign = s == "+" || s == "+1" ? 1 : s == "-" || s == "-1" ? -1 : 0;
    if (sign == 0) throw ValidationError("half twist sign must be + or -");
    return half_twist(static_cast<int>(arg(0, "k")), sign);
  }
  if (kind == "braid") {
    std::string text;
    for (std::size_t i = from + 1; i < to; ++i) {
      if (i > from + 1) text += " ";
      text += toks[i];
    }
    return parse_braid_text(text);
  }
  if (kind == "lemmasym") {
    need(2, "lemmasym p q");
    return klink_braid(lemma_symmetry_klink(static_cast<int>(arg(0, "p")),
                                            static_cast<int>(arg(1, "q"))));
  }
  if (kind == "morimoto") {
    need(5, "morimoto e k1 k2 x1 x2");
    return twisted_torus_braid(
        morimoto_family(arg(0, "e"), arg(1, "k1"), arg(2, "k2"), arg(3, "x1"),
                        arg(4, "x2"))
            .ttk);
  }
  throw ValidationError("unknown family kind '" + kind + "'");
}

}  // namespace

BraidWord build_family(std::string_view spec, SpecMode mode) {
  Tokenizer tok(spec);
  return build_family_tokens(tok.tokens, 0, tok.tokens.size(), mode);
}

}  // namespace braidforge
