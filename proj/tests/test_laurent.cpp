#include <random>
#include <stdexcept>

#include "doctest.h"
#include "flowface/laurent.hpp"
#include "test_helpers.hpp"

using namespace flowface;
using flowface::testing::poly;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) {
    const int e = static_cast<int>(rng() % 10) - 3;
    const long long c = static_cast<long long>(rng() % 19) - 9;
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

}  // namespace

TEST_CASE("product: identity, monomial shift, convolution") {
  const LaurentPoly x = LaurentPoly::variable();
  CHECK((poly({{0, 1}, {1, 1}}) * LaurentPoly(1)) == poly({{0, 1}, {1, 1}}));
  CHECK((poly({{-1, 1}, {0, 2}, {1, 1}}) * x) == poly({{0, 1}, {1, 2}, {2, 1}}));
  const LaurentPoly lhs = poly({{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}});
  const LaurentPoly rhs = poly({{0, 1}, {1, 4}, {2, 4}, {3, 1}});
  CHECK(lhs * rhs ==
        poly({{0, 1}, {1, 8}, {2, 26}, {3, 45}, {4, 45}, {5, 26}, {6, 8}, {7, 1}}));
}

TEST_CASE("canonical form drops zero coefficients") {
  LaurentPoly p = poly({{2, 5}});
  p += poly({{2, -5}});
  CHECK(p.is_zero());
  CHECK(p == LaurentPoly());
  CHECK((poly({{0, 1}, {3, 2}}) - poly({{3, 2}})) == LaurentPoly(1));
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + (q + r) == (p + q) + r);
  }
}

TEST_CASE("degree and lowest exponent are additive under products") {
  std::mt19937_64 rng(777);
  int checked = 0;
  while (checked < 100) {
    const LaurentPoly p = random_poly(rng), q = random_poly(rng);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p * q).lowest() == p.lowest() + q.lowest());
    ++checked;
  }
  CHECK_THROWS_AS(LaurentPoly().degree(), std::domain_error);
}

TEST_CASE("scaled q-factorial product") {
  const LaurentPoly x = LaurentPoly::variable();
  CHECK(scaled_q_factorial(0, x) == LaurentPoly(1));
  CHECK(scaled_q_factorial(2, x) == poly({{2, 2}, {3, 1}}));
  CHECK(scaled_q_factorial(3, LaurentPoly(1)) == LaurentPoly(21));
  // evaluation at x0 = 1 gives prod (2^i - 1)
  BigInt expected = 1;
  for (int k = 1; k <= 10; ++k) {
    expected *= (BigInt(1) << k) - 1;
    CHECK(scaled_q_factorial(k, LaurentPoly(1)) == LaurentPoly(expected));
  }
}

TEST_CASE("shifted q-factorial") {
  CHECK(q_factorial_shifted(0) == LaurentPoly(1));
  CHECK(q_factorial_shifted(3) == poly({{0, 6}, {1, 9}, {2, 5}, {3, 1}}));
  CHECK(q_factorial_shifted(3).eval(1) == 21);
  // x^n [n]_{x+1}! equals the scaled product
  for (int n = 0; n <= 6; ++n)
    CHECK(q_factorial_shifted(n).shifted(n) ==
          scaled_q_factorial(n, LaurentPoly::variable()));
}

TEST_CASE("exact division by powers of x") {
  CHECK(divide_exact_x_power(poly({{2, 1}, {3, 1}}), 2) == poly({{0, 1}, {1, 1}}));
  CHECK(divide_exact_x_power(LaurentPoly(), 5).is_zero());
  CHECK_THROWS_AS(divide_exact_x_power(poly({{1, 1}}), 2), std::logic_error);
}

TEST_CASE("evaluation handles the empty-face exponent only at |x| = 1") {
  const LaurentPoly f = poly({{-1, 1}, {0, 2}, {1, 1}});
  CHECK(f.eval(1) == 4);
  CHECK(f.eval(-1) == 0);
  CHECK_THROWS_AS(f.eval(2), std::domain_error);
  CHECK(poly({{0, 3}, {2, 1}}).eval(5) == 28);
}

TEST_CASE("geometric expansion of 1/(1+ct)") {
  const LaurentPoly x = LaurentPoly::variable();

  TruncatedSeries unit(3);
  unit.set_coeff(0, LaurentPoly(1));
  CHECK(expand_rational(LaurentPoly(1), 0, unit, 3) == TruncatedSeries::one(3));

  TruncatedSeries denom(2);
  denom.set_coeff(0, LaurentPoly(1));
  denom.set_coeff(1, x);
  const TruncatedSeries s = expand_rational(LaurentPoly(1), 0, denom, 2);
  CHECK(s.coeff(0) == LaurentPoly(1));
  CHECK(s.coeff(1) == -x);
  CHECK(s.coeff(2) == x * x);

  // the factor with c = x + 1
  TruncatedSeries denom2(2);
  denom2.set_coeff(0, LaurentPoly(1));
  denom2.set_coeff(1, poly({{0, 1}, {1, 1}}));
  const TruncatedSeries s2 = expand_rational(LaurentPoly(1), 0, denom2, 2);
  CHECK(s2.coeff(1) == poly({{0, -1}, {1, -1}}));
  CHECK(s2.coeff(2) == poly({{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("expand_rational rejects bad denominators") {
  TruncatedSeries denom(2);
  denom.set_coeff(0, LaurentPoly(2));
  CHECK_THROWS_AS(expand_rational(LaurentPoly(1), 0, denom, 2), std::invalid_argument);

  TruncatedSeries quad(2);
  quad.set_coeff(0, LaurentPoly(1));
  quad.set_coeff(2, LaurentPoly(1));
  CHECK_THROWS_AS(expand_rational(LaurentPoly(1), 0, quad, 2), std::invalid_argument);
}

TEST_CASE("series truncated at N agrees with order N+5 on the first N+1 coefficients") {
  std::mt19937_64 rng(2024);
  const int n = 6;
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries a(n), b(n), a_ext(n + 5), b_ext(n + 5);
    for (int k = 0; k <= n; ++k) {
      const LaurentPoly pa = random_poly(rng), pb = random_poly(rng);
      a.set_coeff(k, pa);
      b.set_coeff(k, pb);
      a_ext.set_coeff(k, pa);
      b_ext.set_coeff(k, pb);
    }
    for (int k = n + 1; k <= n + 5; ++k) {
      a_ext.set_coeff(k, random_poly(rng));
      b_ext.set_coeff(k, random_poly(rng));
    }
    CHECK((a_ext * b_ext).truncated(n) == a * b);
    CHECK((a_ext + b_ext).truncated(n) == a + b);
  }
}
