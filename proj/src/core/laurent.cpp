#include "core/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace braidforge {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in polynomial addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in polynomial multiplication");
  return r;
}

int checked_exp_add(int a, int b) {
  long long r = static_cast<long long>(a) + b;
  if (r > INT32_MAX || r < INT32_MIN)
    throw OverflowError("exponent overflow");
  return static_cast<int>(r);
}

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second = checked_add(p.terms_.back().second, t.second);
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::power_minus_one(int k) {
  LaurentPoly p;
  p.terms_ = {{0, -1}, {k, 1}};
  return p;
}

LaurentPoly LaurentPoly::geometric(int k) {
  LaurentPoly p;
  p.terms_.reserve(k);
  for (int e = 0; e < k; ++e) p.terms_.push_back({e, 1});
  return p;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw InternalError("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw InternalError("max_exponent of zero polynomial");
  return terms_.back().first;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::int64_t LaurentPoly::evaluated_at_one() const {
  std::int64_t s = 0;
  for (const Term& t : terms_) s = checked_add(s, t.second);
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r.add_scaled(other, 1, 0);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r.add_scaled(other, -1, 0);
  return r;
}

LaurentPoly LaurentPoly::negated() const {
  LaurentPoly r = *this;
  for (Term& t : r.terms_) t.second = -t.second;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, std::int64_t coeff,
                             int shift) {
  if (coeff == 0 || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int eo = j < other.terms_.size()
                 ? checked_exp_add(other.terms_[j].first, shift)
                 : 0;
    if (j == other.terms_.size() ||
        (i < terms_.size() && terms_[i].first < eo)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || terms_[i].first > eo) {
      merged.push_back({eo, checked_mul(other.terms_[j].second, coeff)});
      ++j;
    } else {
      std::int64_t c = checked_add(
          terms_[i].second, checked_mul(other.terms_[j].second, coeff));
      if (c != 0) merged.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return zero();
  // Dense convolution over the combined exponent window.
  long long lo = static_cast<long long>(min_exponent()) + other.min_exponent();
  long long hi = static_cast<long long>(max_exponent()) + other.max_exponent();
  if (hi - lo > 4'000'000)
    throw ResourceError("polynomial product exponent range too large");
  std::vector<std::int64_t> dense(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const Term& a : terms_)
    for (const Term& b : other.terms_) {
      std::size_t idx = static_cast<std::size_t>(
          static_cast<long long>(a.first) + b.first - lo);
      dense[idx] = checked_add(dense[idx], checked_mul(a.second, b.second));
    }
  LaurentPoly r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0)
      r.terms_.push_back({static_cast<int>(lo + static_cast<long long>(i)),
                          dense[i]});
  return r;
}

LaurentPoly LaurentPoly::substituted(int k) const {
  if (k == 0) throw ValidationError("substitution exponent must be nonzero");
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    long long e = static_cast<long long>(t.first) * k;
    if (e > INT32_MAX || e < INT32_MIN) throw OverflowError("exponent overflow");
    r.terms_.push_back({static_cast<int>(e), t.second});
  }
  if (k < 0) std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return zero();
  LaurentPoly r = *this;
  int shift = -min_exponent();
  for (Term& t : r.terms_) t.first = checked_exp_add(t.first, shift);
  if (r.terms_.front().second < 0)
    for (Term& t : r.terms_) t.second = -t.second;
  return r;
}

std::pair<LaurentPoly, bool> LaurentPoly::divided_exact(
    const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ValidationError("division by zero polynomial");
  if (is_zero()) return {zero(), true};
  // Shift both to plain polynomials; the quotient picks up the exponent
  // difference.
  int shift = min_exponent() - divisor.min_exponent();
  std::vector<std::int64_t> num(static_cast<std::size_t>(span()) + 1, 0);
  for (const Term& t : terms_) num[t.first - min_exponent()] = t.second;
  std::vector<std::int64_t> den(static_cast<std::size_t>(divisor.span()) + 1,
                                0);
  for (const Term& t : divisor.terms_)
    den[t.first - divisor.min_exponent()] = t.second;
  if (num.size() < den.size()) return {zero(), false};
  std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
  std::int64_t lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t top = num[i + den.size() - 1];
    if (top % lead != 0) return {zero(), false};
    std::int64_t q = top / lead;
    quot[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < den.size(); ++j)
        num[i + j] = checked_add(num[i + j], -checked_mul(q, den[j]));
  }
  for (std::int64_t c : num)
    if (c != 0) return {zero(), false};
  LaurentPoly r;
  for (std::size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0)
      r.terms_.push_back({checked_exp_add(static_cast<int>(i), shift), quot[i]});
  return {r, true};
}

bool LaurentPoly::palindromic() const {
  if (is_zero()) return true;
  std::size_t n = terms_.size();
  int lo = min_exponent(), hi = max_exponent();
  for (std::size_t i = 0; i < n; ++i) {
    const Term& a = terms_[i];
    const Term& b = terms_[n - 1 - i];
    if (a.second != b.second || a.first - lo != hi - b.first) return false;
  }
  return true;
}

std::string LaurentPoly::to_text(int exponent_denominator) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    std::int64_t c = t.second;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    int num = t.first;
    int den = exponent_denominator;
    int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
      num /= g;
      den /= g;
    }
    if (t.first == 0) {
      out << mag;
      continue;
    }
    out << mag << "*t";
    if (den == 1) {
      if (num != 1) out << "^" << num;
    } else {
      out << "^(" << num << "/" << den << ")";
    }
  }
  return out.str();
}

}  // namespace braidforge
