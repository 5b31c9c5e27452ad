#include "core/burau.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "core/errors.hpp"

namespace braidforge {

namespace {

// ---------------------------------------------------------------------------
// Modular arithmetic on primes just below 2^61.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                    23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin bases for n < 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> primes_for_bits(double bits) {
  // Enough primes near 2^61 so that their product exceeds 2^(bits+2).
  std::vector<u64> primes;
  double have = 0;
  u64 candidate = (1ull << 61) - 1;
  while (have < bits + 2) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    have += std::log2(static_cast<double>(candidate));
    candidate -= 2;
  }
  return primes;
}

// ---------------------------------------------------------------------------
// Laurent-polynomial matrices, stored column-major.

struct LaurentMatrix {
  int m = 0;
  std::vector<LaurentPoly> cells;  // cells[col * m + row]

  LaurentPoly& at(int row, int col) { return cells[col * m + row]; }
  const LaurentPoly& at(int row, int col) const { return cells[col * m + row]; }

  static LaurentMatrix identity(int m) {
    LaurentMatrix mat;
    mat.m = m;
    mat.cells.assign(static_cast<std::size_t>(m) * m, LaurentPoly::zero());
    for (int i = 0; i < m; ++i) mat.at(i, i) = LaurentPoly::one();
    return mat;
  }
};

// Reduced Burau image of the word, built by right-multiplying sparse
// generator matrices; each letter rewrites a single column:
//   sigma_i:      col_i <- t*col_{i-1} - t*col_i + col_{i+1}
//   sigma_i^-1:   col_i <-   col_{i-1} - t^-1*col_i + t^-1*col_{i+1}
// (missing neighbours drop out at i = 1 and i = n-1).
LaurentMatrix reduced_burau(const BraidWord& w) {
  int m = w.strands() - 1;
  LaurentMatrix mat = LaurentMatrix::identity(m);
  for (int e : w.letters()) {
    int c = std::abs(e) - 1;
    for (int row = 0; row < m; ++row) {
      LaurentPoly cell;
      if (e > 0) {
        if (c > 0) cell.add_scaled(mat.at(row, c - 1), 1, 1);
        cell.add_scaled(mat.at(row, c), -1, 1);
        if (c + 1 < m) cell.add_scaled(mat.at(row, c + 1), 1, 0);
      } else {
        if (c > 0) cell.add_scaled(mat.at(row, c - 1), 1, 0);
        cell.add_scaled(mat.at(row, c), -1, -1);
        if (c + 1 < m) cell.add_scaled(mat.at(row, c + 1), 1, -1);
      }
      mat.at(row, c) = std::move(cell);
    }
  }
  return mat;
}

// ---------------------------------------------------------------------------
// Exact determinant of a Laurent-polynomial matrix by evaluation and
// interpolation over word-size primes. The coefficient bound is rigorous:
// the L1 norm of the determinant is at most the product of the row L1 sums,
// so combining residues over primes whose product exceeds twice that bound
// makes the symmetric lift provably exact. Every row is shifted to plain
// polynomial form first; the resulting unit factor t^k cancels in the
// caller's normalization.
LaurentPoly laurent_matrix_det(const LaurentMatrix& a) {
  int m = a.m;
  if (m == 0) return LaurentPoly::one();

  long long degree_bound = 0;
  long long shift_total = 0;
  double bits = 1.0;
  std::vector<int> row_shift(m, 0);
  for (int row = 0; row < m; ++row) {
    bool all_zero = true;
    int lo = 0, hi = 0;
    double l1 = 0;
    for (int col = 0; col < m; ++col) {
      const LaurentPoly& cell = a.at(row, col);
      if (cell.is_zero()) continue;
      if (all_zero) {
        lo = cell.min_exponent();
        hi = cell.max_exponent();
        all_zero = false;
      } else {
        lo = std::min(lo, cell.min_exponent());
        hi = std::max(hi, cell.max_exponent());
      }
      for (const auto& [e, c] : cell.terms())
        l1 += std::abs(static_cast<double>(c));
    }
    if (all_zero) return LaurentPoly::zero();
    row_shift[row] = -lo;
    shift_total += -static_cast<long long>(lo);
    degree_bound += hi - lo;
    bits += std::log2(l1 + 1.0);
  }
  if (degree_bound > 1'000'000)
    throw ResourceError("Burau determinant degree bound too large");

  const std::size_t points = static_cast<std::size_t>(degree_bound) + 1;
  const std::vector<u64> primes = primes_for_bits(bits);

  // residues[k][e]: coefficient of t^e of the shifted determinant mod
  // primes[k].
  std::vector<std::vector<u64>> residues;
  residues.reserve(primes.size());

  std::vector<u64> powers(points);
  std::vector<u64> values(points);
  std::vector<u64> mat(static_cast<std::size_t>(m) * m);

  for (u64 p : primes) {
    for (std::size_t pt = 0; pt < points; ++pt) {
      u64 x = static_cast<u64>(pt + 1) % p;
      powers[0] = 1;
      for (std::size_t e = 1; e < points; ++e)
        powers[e] = mulmod(powers[e - 1], x, p);
      for (int row = 0; row < m; ++row)
        for (int col = 0; col < m; ++col) {
          u64 acc = 0;
          for (const auto& [e, c] : a.at(row, col).terms()) {
            u64 cm = c >= 0 ? static_cast<u64>(c) % p
                            : p - static_cast<u64>(-c) % p;
            acc = static_cast<u64>(
                (u128(cm) * powers[e + row_shift[row]] + acc) % p);
          }
          mat[static_cast<std::size_t>(row) * m + col] = acc;
        }
      // Gaussian elimination mod p with partial pivoting.
      u64 det = 1;
      for (int col = 0; col < m && det != 0; ++col) {
        int pivot = -1;
        for (int row = col; row < m; ++row)
          if (mat[static_cast<std::size_t>(row) * m + col] != 0) {
            pivot = row;
            break;
          }
        if (pivot < 0) {
          det = 0;
          break;
        }
        if (pivot != col) {
          for (int j = col; j < m; ++j)
            std::swap(mat[static_cast<std::size_t>(pivot) * m + j],
                      mat[static_cast<std::size_t>(col) * m + j]);
          det = p - det;
        }
        u64 diag = mat[static_cast<std::size_t>(col) * m + col];
        det = mulmod(det, diag, p);
        u64 inv = invmod(diag, p);
        for (int row = col + 1; row < m; ++row) {
          u64 f = mat[static_cast<std::size_t>(row) * m + col];
          if (f == 0) continue;
          f = mulmod(f, inv, p);
          for (int j = col; j < m; ++j) {
            u64& cell = mat[static_cast<std::size_t>(row) * m + j];
            u64 sub = mulmod(f, mat[static_cast<std::size_t>(col) * m + j], p);
            cell = cell >= sub ? cell - sub : cell + p - sub;
          }
        }
      }
      values[pt] = det;
    }

    // Newton divided differences on nodes x_k = k+1, in place.
    std::vector<u64> inv_small(points + 1, 1);
    for (std::size_t k = 2; k <= points; ++k) inv_small[k] = invmod(k % p, p);
    std::vector<u64> dd = values;
    for (std::size_t k = 1; k < points; ++k)
      for (std::size_t i = points; i-- > k;) {
        u64 diff =
            dd[i] >= dd[i - 1] ? dd[i] - dd[i - 1] : dd[i] + p - dd[i - 1];
        dd[i] = mulmod(diff, inv_small[k], p);
      }

    // Expand the Newton form to monomial coefficients:
    // P = dd[0] + (x - x_0)(dd[1] + (x - x_1)(...)).
    std::vector<u64> poly(points, 0);
    std::size_t degree = 0;
    poly[0] = dd[points - 1];
    for (std::size_t k = points - 1; k-- > 0;) {
      u64 xk = static_cast<u64>(k + 1) % p;
      // poly <- poly * (x - xk) + dd[k]
      ++degree;
      poly[degree] = poly[degree - 1];
      for (std::size_t i = degree - 1; i >= 1; --i) {
        u64 scaled = mulmod(poly[i], xk, p);
        u64 shifted = poly[i - 1];
        poly[i] = shifted >= scaled ? shifted - scaled : shifted + p - scaled;
      }
      u64 scaled0 = mulmod(poly[0], xk, p);
      poly[0] = scaled0 <= dd[k] ? dd[k] - scaled0 : dd[k] + p - scaled0;
    }
    residues.push_back(std::move(poly));
  }

  // Symmetric lift from the first prime, cross-checked against the rest;
  // the bound guarantees a mismatch can only mean a coefficient beyond the
  // 64-bit range.
  LaurentPoly det;
  std::vector<LaurentPoly::Term> terms;
  u64 p0 = primes[0];
  for (std::size_t e = 0; e < points; ++e) {
    u64 r0 = residues[0][e];
    long long value = r0 > (p0 - 1) / 2
                          ? -static_cast<long long>(p0 - r0)
                          : static_cast<long long>(r0);
    for (std::size_t k = 1; k < primes.size(); ++k) {
      u64 pk = primes[k];
      u64 expect = value >= 0 ? static_cast<u64>(value) % pk
                              : pk - static_cast<u64>(-value) % pk;
      if (expect % pk != residues[k][e] % pk)
        throw OverflowError(
            "determinant coefficient exceeds the 64-bit range");
    }
    if (value != 0)
      terms.push_back({static_cast<int>(static_cast<long long>(e) -
                                        shift_total),
                       value});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly alexander(const BraidWord& w) {
  int n = w.strands();
  if (n == 1) return LaurentPoly::one();
  LaurentMatrix a = reduced_burau(w);
  for (int i = 0; i < a.m; ++i)
    a.at(i, i) = a.at(i, i) - LaurentPoly::one();
  LaurentPoly det = laurent_matrix_det(a);
  if (det.is_zero()) return LaurentPoly::zero();
  auto [quotient, exact] = det.divided_exact(LaurentPoly::geometric(n));
  if (!exact)
    throw InternalError("Burau determinant not divisible by 1+t+...+t^(n-1)");
  return quotient.normalized();
}

LaurentPoly torus_alexander(long long p, long long q) {
  if (p < 1 || q < 1) throw ValidationError("needs p, q >= 1");
  if (std::gcd(p, q) != 1)
    throw ValidationError("torus Alexander closed form needs gcd(p, q) = 1");
  if (p == 1 || q == 1) return LaurentPoly::one();
  if (p * q > 2'000'000) throw ResourceError("torus parameters too large");
  LaurentPoly numerator =
      LaurentPoly::power_minus_one(static_cast<int>(p * q)) *
      LaurentPoly::power_minus_one(1);
  LaurentPoly denominator =
      LaurentPoly::power_minus_one(static_cast<int>(p)) *
      LaurentPoly::power_minus_one(static_cast<int>(q));
  auto [quotient, exact] = numerator.divided_exact(denominator);
  if (!exact) throw InternalError("torus Alexander division not exact");
  return quotient.normalized();
}

LaurentPoly cable_alexander(const LaurentPoly& delta_companion, long long m,
                            long long c) {
  if (m < 1) throw ValidationError("cable winding must be at least 1");
  if (std::gcd(m, std::llabs(c)) != 1)
    throw ValidationError("cable Alexander needs gcd(m, c) = 1 (knot cable)");
  LaurentPoly pattern = torus_alexander(m, std::llabs(c));
  return (pattern * delta_companion.substituted(static_cast<int>(m)))
      .normalized();
}

}  // namespace braidforge
