#include "flowface/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace flowface {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::variable() { return monomial(1, 1); }

const BigInt& LaurentPoly::coeff(int exponent) const {
  static const BigInt kZero = 0;
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? kZero : it->second;
}

int LaurentPoly::degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

int LaurentPoly::lowest() const {
  if (coeffs_.empty()) throw std::domain_error("lowest exponent of zero polynomial");
  return coeffs_.begin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly r;
  for (const auto& [ea, ca] : lhs.terms())
    for (const auto& [eb, cb] : rhs.terms()) r += LaurentPoly::monomial(ca * cb, ea + eb);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1);
  LaurentPoly b = *this;
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return r;
}

BigInt LaurentPoly::eval(const BigInt& point) const {
  BigInt r = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e >= 0) {
      r += c * int_pow(point, static_cast<unsigned>(e));
    } else if (point == 1) {
      r += c;
    } else if (point == -1) {
      r += (e % 2 == 0) ? c : -c;
    } else {
      throw std::domain_error("negative exponent evaluated away from |x| = 1");
    }
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "x";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly xplus1_pow(unsigned k) {
  LaurentPoly r;
  for (unsigned j = 0; j <= k; ++j) r += LaurentPoly::monomial(binomial(k, j), static_cast<int>(j));
  return r;
}

LaurentPoly divide_exact_x_power(const LaurentPoly& p, int n) {
  if (!p.is_zero() && p.lowest() < n)
    throw std::logic_error("inexact division by x^" + std::to_string(n) + " of " + p.str());
  return p.shifted(-n);
}

LaurentPoly scaled_q_factorial(int k, const LaurentPoly& x0) {
  const LaurentPoly one(1);
  const LaurentPoly base = x0 + one;
  LaurentPoly r(1);
  for (int i = 1; i <= k; ++i) r *= base.pow(static_cast<unsigned>(i)) - one;
  return r;
}

LaurentPoly q_factorial_shifted(int n) {
  LaurentPoly r(1);
  for (int i = 1; i <= n; ++i) {
    LaurentPoly factor;
    for (int j = 0; j < i; ++j) factor += xplus1_pow(static_cast<unsigned>(j));
    r *= factor;
  }
  return r;
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = LaurentPoly(1);
  return s;
}

const LaurentPoly& TruncatedSeries::coeff(int k) const {
  static const LaurentPoly kZero;
  if (k < 0 || k > order()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, LaurentPoly value) {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
  coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  for (int k = 0; k <= order(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  for (int k = 0; k <= order(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries r(order());
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order(); ++j) r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const LaurentPoly& c) const {
  TruncatedSeries r(order());
  for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
  return r;
}

TruncatedSeries TruncatedSeries::shifted_t(int k) const {
  if (k < 0) throw std::invalid_argument("negative t-shift");
  TruncatedSeries r(order());
  for (int j = 0; j + k <= order(); ++j) r.coeffs_[j + k] = coeffs_[j];
  return r;
}

TruncatedSeries TruncatedSeries::rescaled_t(const LaurentPoly& c) const {
  TruncatedSeries r(order());
  LaurentPoly ck(1);
  for (int k = 0; k <= order(); ++k) {
    r.coeffs_[k] = coeffs_[k] * ck;
    ck *= c;
  }
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
  TruncatedSeries r(new_order);
  for (int k = 0; k <= new_order; ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }

TruncatedSeries geometric_inverse(const LaurentPoly& c, int order) {
  TruncatedSeries r(order);
  LaurentPoly term(1);
  r.set_coeff(0, term);
  for (int k = 1; k <= order; ++k) {
    term = -(term * c);
    if (term.is_zero()) break;
    r.set_coeff(k, term);
  }
  return r;
}

TruncatedSeries expand_rational(const LaurentPoly& numer, int numer_tpow,
                                const TruncatedSeries& denom, int order) {
  if (denom.coeff(0) != LaurentPoly(1))
    throw std::invalid_argument("denominator must have constant term 1 in t");
  for (int k = 2; k <= denom.order(); ++k)
    if (!denom.coeff(k).is_zero())
      throw std::invalid_argument("denominator must be linear in t");
  TruncatedSeries r = geometric_inverse(denom.coeff(1), order).scaled(numer);
  return numer_tpow == 0 ? r : r.shifted_t(numer_tpow);
}

}  // namespace flowface
