#include "core/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "core/errors.hpp"

namespace braidforge {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images.size(), false);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = images[j]) seen[j] = true;
  }
  return cycles;
}

Permutation Permutation::then(const Permutation& b) const {
  if (size() != b.size())
    throw ValidationError("permutation size mismatch");
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < size(); ++i) r.images[i] = b.images[images[i]];
  return r;
}

bool BraidWord::all_positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](int e) { return e > 0; });
}

std::string BraidWord::format() const {
  std::ostringstream out;
  out << strands_ << ":";
  for (int e : letters_) out << " " << e;
  return out.str();
}

BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 1)
    throw ValidationError("strand count must be at least 1, got " +
                          std::to_string(strands));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    int e = letters[i];
    int idx = std::abs(e);
    if (e == 0 || idx > strands - 1)
      throw ValidationError("letter " + std::to_string(e) +
                            " out of range for " + std::to_string(strands) +
                            " strands (index " + std::to_string(i) + ")");
  }
  BraidWord w;
  w.strands_ = strands;
  w.letters_ = std::move(letters);
  return w;
}

BraidWord parse_braid_text(std::string_view text) {
  // Single-line format; column positions are 1-based character offsets.
  std::size_t pos = 0;
  auto column = [&]() { return static_cast<int>(pos) + 1; };
  auto skip_space = [&]() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
            text[pos] == '\n'))
      ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError(std::string("expected ") + what, 1,
                       static_cast<int>(start) + 1);
    try {
      return std::stoll(std::string(text.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", 1, static_cast<int>(start) + 1);
    }
  };

  long long n = read_int("strand count");
  skip_space();
  if (pos >= text.size() || text[pos] != ':')
    throw ParseError("expected ':' after strand count", 1, column());
  ++pos;
  if (n < 1 || n > 1'000'000)
    throw ParseError("strand count out of range", 1, 1);

  std::vector<int> letters;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    int col = column();
    long long e = read_int("letter (signed integer)");
    if (e == 0 || std::llabs(e) > n - 1)
      throw ParseError("letter " + std::to_string(e) + " out of range for " +
                       std::to_string(n) + " strands", 1, col);
    letters.push_back(static_cast<int>(e));
  }
  return make_braid(static_cast<int>(n), std::move(letters));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw ValidationError("cannot compose words on " +
                          std::to_string(a.strands()) + " and " +
                          std::to_string(b.strands()) + " strands");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return make_braid(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& e : letters) e = -e;
  return make_braid(w.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<int> letters = w.letters();
  for (int& e : letters) e = -e;
  return make_braid(w.strands(), std::move(letters));
}

BraidWord reverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  return make_braid(w.strands(), std::move(letters));
}

BraidWord flip(const BraidWord& w) {
  std::vector<int> letters = w.letters();
  int n = w.strands();
  for (int& e : letters) e = e > 0 ? n - e : -(n + e);
  return make_braid(w.strands(), std::move(letters));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int e : w.letters()) {
    int i = std::abs(e) - 1;  // swaps positions i, i+1
    for (int& img : p.images) {
      if (img == i)
        img = i + 1;
      else if (img == i + 1)
        img = i;
    }
  }
  return p;
}

int component_count(const BraidWord& w) {
  return permutation_of(w).cycle_count();
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int e : w.letters()) s += e > 0 ? 1 : -1;
  return s;
}

const char* move_kind_name(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::free_cancel: return "free-cancel";
    case Move::Kind::braid_relation_far: return "braid-relation-far";
    case Move::Kind::braid_relation_near: return "braid-relation-near";
    case Move::Kind::conjugate_cyclic: return "conjugate-cyclic";
    case Move::Kind::stabilize: return "stabilize";
    case Move::Kind::destabilize: return "destabilize";
    case Move::Kind::flip: return "flip";
    case Move::Kind::mirror: return "mirror";
    case Move::Kind::reverse: return "reverse";
  }
  return "?";
}

BraidWord apply_move(const BraidWord& w, const Move& m) {
  const std::vector<int>& ls = w.letters();
  int len = static_cast<int>(ls.size());
  auto fail = [&](const std::string& why) -> BraidWord {
    throw ValidationError(std::string(move_kind_name(m.kind)) +
                          " not applicable: " + why);
  };
  switch (m.kind) {
    case Move::Kind::free_cancel: {
      if (m.pos < 0 || m.pos + 1 >= len) return fail("position out of range");
      if (ls[m.pos] != -ls[m.pos + 1])
        return fail("letters at position are not inverse");
      std::vector<int> out(ls.begin(), ls.begin() + m.pos);
      out.insert(out.end(), ls.begin() + m.pos + 2, ls.end());
      return make_braid(w.strands(), std::move(out));
    }
    case Move::Kind::braid_relation_far: {
      if (m.pos < 0 || m.pos + 1 >= len) return fail("position out of range");
      if (std::abs(std::abs(ls[m.pos]) - std::abs(ls[m.pos + 1])) < 2)
        return fail("generator indices are adjacent");
      std::vector<int> out = ls;
      std::swap(out[m.pos], out[m.pos + 1]);
      return make_braid(w.strands(), std::move(out));
    }
    case Move::Kind::braid_relation_near: {
      if (m.pos < 0 || m.pos + 2 >= len) return fail("position out of range");
      int a = ls[m.pos], b = ls[m.pos + 1], c = ls[m.pos + 2];
      if (a != c || std::abs(std::abs(a) - std::abs(b)) != 1 ||
          (a > 0) != (b > 0))
        return fail("letters do not match the (a,b,a) pattern");
      std::vector<int> out = ls;
      out[m.pos] = b;
      out[m.pos + 1] = a;
      out[m.pos + 2] = b;
      return make_braid(w.strands(), std::move(out));
    }
    case Move::Kind::conjugate_cyclic: {
      if (len == 0) return w;
      int k = ((m.arg % len) + len) % len;
      std::vector<int> out(ls.begin() + k, ls.end());
      out.insert(out.end(), ls.begin(), ls.begin() + k);
      return make_braid(w.strands(), std::move(out));
    }
    case Move::Kind::stabilize: {
      if (m.arg != 1 && m.arg != -1) return fail("sign must be +1 or -1");
      std::vector<int> out = ls;
      out.push_back(m.arg * w.strands());
      return make_braid(w.strands() + 1, std::move(out));
    }
    case Move::Kind::destabilize: {
      if (len == 0) return fail("word is empty");
      int n = w.strands();
      if (n < 2) return fail("needs at least 2 strands");
      if (std::abs(ls.back()) != n - 1)
        return fail("last letter is not +-(strands-1)");
      int count = 0;
      for (int e : ls)
        if (std::abs(e) == n - 1) ++count;
      if (count != 1)
        return fail("index " + std::to_string(n - 1) +
                    " occurs more than once");
      std::vector<int> out(ls.begin(), ls.end() - 1);
      return make_braid(n - 1, std::move(out));
    }
    case Move::Kind::flip: return flip(w);
    case Move::Kind::mirror: return mirror(w);
    case Move::Kind::reverse: return reverse(w);
  }
  return fail("unknown move kind");
}

}  // namespace braidforge
