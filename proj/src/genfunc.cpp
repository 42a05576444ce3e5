#include "flowface/genfunc.hpp"

#include <stdexcept>

#include "flowface/facecount.hpp"

namespace flowface {

TruncatedSeries cry_face_series(int order) {
  const LaurentPoly one(1);
  const LaurentPoly x = LaurentPoly::variable();

  // 1/(x - xt) = x^{-1} * sum_k t^k: the empty face of every CRY_n
  TruncatedSeries total(order);
  for (int k = 0; k <= order; ++k) total.set_coeff(k, LaurentPoly::monomial(1, -1));

  for (int n = 0; n <= order; ++n) {
    TruncatedSeries summand = TruncatedSeries::one(order);
    LaurentPoly numer(1);
    for (int i = 1; i <= n; ++i) {
      const LaurentPoly qi = xplus1_pow(static_cast<unsigned>(i)) - one;
      numer *= qi;
      summand = summand * geometric_inverse((qi - x).shifted(-1), order);
    }
    total += summand.scaled(numer.shifted(-n)).shifted_t(n);
  }
  return total;
}

TruncatedSeries jelinek_series(const SeriesRequest& req) {
  const LaurentPoly one(1);
  const LaurentPoly vp1 = req.v + one;
  const LaurentPoly wp1 = req.w + one;
  const LaurentPoly xp1 = req.x + one;
  const LaurentPoly yp1 = req.y + one;

  TruncatedSeries total(req.order);
  for (int n = 0; n + 1 <= req.order; ++n) {
    const LaurentPoly head = xp1 * yp1.pow(static_cast<unsigned>(n)) - one;
    const LaurentPoly head_denom = vp1 * wp1.pow(static_cast<unsigned>(n)) - one;
    TruncatedSeries summand = geometric_inverse(head_denom, req.order).scaled(head);
    for (int i = 0; i < n; ++i) {
      const LaurentPoly factor = vp1 * wp1.pow(static_cast<unsigned>(i)) - one;
      summand = summand * geometric_inverse(factor, req.order).scaled(factor);
    }
    total += summand.shifted_t(n + 1);
  }
  return total;
}

LaurentPoly jelinek_primitive_fpoly(const TruncatedSeries& g, int n) {
  if (n < 1 || n > g.order()) throw std::invalid_argument("t-power outside series order");
  return divide_exact_x_power(g.coeff(n), n);
}

bool product_identity_check(int n) {
  if (n < 2) throw std::invalid_argument("product identity needs n >= 2");
  const LaurentPoly lhs = LaurentPoly::variable() * cry_fpoly(n);
  const LaurentPoly rhs = xplus1_pow(static_cast<unsigned>(n)) * cry_primitive_fpoly(n - 1);
  return lhs == rhs;
}

bool product_identity_alt_check(int n) {
  if (n < 2) throw std::invalid_argument("product identity needs n >= 2");
  const LaurentPoly lhs = LaurentPoly::variable() * cry_fpoly(n);
  const LaurentPoly rhs = xplus1_pow(static_cast<unsigned>(n - 1)) * cry_primitive_fpoly(n);
  return lhs == rhs;
}

}  // namespace flowface
