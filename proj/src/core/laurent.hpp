#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace braidforge {

// Finitely supported Laurent polynomial with exact 64-bit integer
// coefficients. Terms are kept sorted by ascending exponent with no zero
// coefficients stored. All arithmetic is overflow-checked and throws
// OverflowError instead of wrapping.
class LaurentPoly {
 public:
  using Term = std::pair<int, std::int64_t>;  // (exponent, coefficient)

  LaurentPoly() = default;  // zero

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  // Collects arbitrary (exponent, coefficient) pairs: sorts, merges, drops
  // zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  // t^k - 1 for k >= 1.
  static LaurentPoly power_minus_one(int k);
  // 1 + t + ... + t^{k-1}.
  static LaurentPoly geometric(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }
  std::int64_t coeff(int exponent) const;
  std::int64_t evaluated_at_one() const;

  bool operator==(const LaurentPoly& other) const = default;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly negated() const;

  // this += other * coeff * t^shift
  void add_scaled(const LaurentPoly& other, std::int64_t coeff, int shift);

  // t -> t^k. k may be negative (k = -1 is the mirror substitution); k != 0.
  LaurentPoly substituted(int k) const;

  // Canonical unit representative: minimal exponent 0, lowest coefficient
  // positive. Zero stays zero.
  LaurentPoly normalized() const;

  // Exact division; second member is false when the division has a
  // remainder (in which case the quotient value is unspecified).
  std::pair<LaurentPoly, bool> divided_exact(const LaurentPoly& divisor) const;

  // True when the coefficient sequence reads the same in both directions.
  bool palindromic() const;

  // Rendering: "1 - 1*t + 1*t^2". exponent_denominator scales printed
  // exponents (4 is used for Jones values stored in quarter powers of t).
  std::string to_text(int exponent_denominator = 1) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace braidforge
