#pragma once

#include <map>
#include <iosfwd>
#include <string>
#include <vector>

#include "flowface/bigint.hpp"

namespace flowface {

/// Laurent polynomial in one variable x over arbitrary-precision integers.
///
/// Kept in canonical form at all times: zero coefficients are never stored,
/// so two values are equal iff their coefficient maps are equal. Exponents
/// may be negative (the empty-face term of an f-polynomial lives at x^-1).
/// Values are immutable in spirit: every operation returns a fresh value,
/// and const objects are safe to share across threads.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  explicit LaurentPoly(BigInt constant);
  explicit LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

  static LaurentPoly monomial(BigInt coeff, int exponent);
  static LaurentPoly variable();  // x

  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^exponent (zero if absent).
  const BigInt& coeff(int exponent) const;
  int degree() const;  // highest exponent; throws std::domain_error on zero
  int lowest() const;  // lowest exponent; throws std::domain_error on zero
  const std::map<int, BigInt>& terms() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  /// Multiply by x^k (k may be negative).
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned k) const;

  /// Evaluate at an integer point. Negative exponents are only meaningful
  /// for |point| == 1; anything else throws std::domain_error.
  BigInt eval(const BigInt& point) const;

  std::string str() const;

  bool operator==(const LaurentPoly& rhs) const = default;

 private:
  std::map<int, BigInt> coeffs_;
};

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// (x+1)^k as a polynomial in x.
LaurentPoly xplus1_pow(unsigned k);

/// Multiply by x^-n, insisting that every exponent of p is >= n.
/// The formula engines divide homogeneous sums by x^n; an inexact division
/// there means the sum itself is wrong, so this throws std::logic_error.
LaurentPoly divide_exact_x_power(const LaurentPoly& p, int n);

/// prod_{i=1..k} ((x0+1)^i - 1) for an arbitrary Laurent-polynomial x0.
LaurentPoly scaled_q_factorial(int k, const LaurentPoly& x0);

/// [n]_{x+1}! = prod_{i=1..n} (1 + (x+1) + ... + (x+1)^{i-1}).
LaurentPoly q_factorial_shifted(int n);

/// Power series in t, truncated at a fixed order, with LaurentPoly
/// coefficients. Arithmetic never reads or writes beyond the order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& coeff(int k) const;
  void set_coeff(int k, LaurentPoly value);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries scaled(const LaurentPoly& c) const;  // multiply every coefficient
  TruncatedSeries shifted_t(int k) const;              // multiply by t^k, k >= 0
  /// Substitute t -> c*t.
  TruncatedSeries rescaled_t(const LaurentPoly& c) const;
  /// Same series truncated at a (possibly smaller) order.
  TruncatedSeries truncated(int order) const;

  bool operator==(const TruncatedSeries& rhs) const = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);

/// Geometric expansion of 1/(1 + c t): sum_k (-c)^k t^k.
TruncatedSeries geometric_inverse(const LaurentPoly& c, int order);

/// (numer * t^numer_tpow) / denom where denom must be 1 + c*t.
/// Rejects denominators whose t^0 coefficient is not 1 or that carry terms
/// beyond t^1 (std::invalid_argument).
TruncatedSeries expand_rational(const LaurentPoly& numer, int numer_tpow,
                                const TruncatedSeries& denom, int order);

}  // namespace flowface
