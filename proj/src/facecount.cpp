#include "flowface/facecount.hpp"

#include <random>
#include <stdexcept>

namespace flowface {

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

// x_i = (x+1)^i - 1 for i = 1..count.
EvaluationVector qshift_points(int count) {
  EvaluationVector v;
  v.reserve(static_cast<std::size_t>(count));
  const LaurentPoly one(1);
  for (int i = 1; i <= count; ++i) v.push_back(xplus1_pow(static_cast<unsigned>(i)) - one);
  return v;
}

}  // namespace

LaurentPoly complete_homogeneous(int m, std::span<const LaurentPoly> values) {
  if (m < 0) throw std::invalid_argument("degree must be >= 0");
  // h[d] = complete homogeneous sum of degree d over the values seen so far
  std::vector<LaurentPoly> h(static_cast<std::size_t>(m) + 1);
  h[0] = LaurentPoly(1);
  for (const LaurentPoly& v : values)
    for (int d = 1; d <= m; ++d) h[d] += v * h[d - 1];
  return h[static_cast<std::size_t>(m)];
}

LaurentPoly composition_alternating_sum(const Composition& alpha,
                                        std::span<const LaurentPoly> values) {
  const int n = alpha.sum();
  if (static_cast<int>(values.size()) < n)
    throw std::invalid_argument("evaluation vector is missing slots");
  LaurentPoly total;
  for (const Composition& beta : refinements(alpha)) {
    LaurentPoly term(parity_sign(n - beta.length()));
    for (int i = 0; i < beta.length(); ++i)
      term *= values[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(beta.parts[i]));
    total += term;
  }
  return total;
}

LaurentPoly primitive_fpoly(const Composition& alpha) {
  const int n = alpha.sum();
  const EvaluationVector points = qshift_points(n);
  return divide_exact_x_power(composition_alternating_sum(alpha, points), n);
}

LaurentPoly primitive_fpoly(const NetflowVector& a) {
  return primitive_fpoly(reverse_composition(a));
}

LaurentPoly primitive_fpoly_by_subsets(const NetflowVector& a) {
  const int n = a.size();
  const LaurentPoly one(1);

  std::uint32_t support = 0;  // indices j in [n-1] with a_{j+1} != 0
  for (int j = 1; j < n; ++j)
    if (a.bits()[static_cast<std::size_t>(j)] != 0) support |= 1u << (j - 1);

  LaurentPoly total;
  const std::uint32_t full = (n >= 2) ? ((1u << (n - 1)) - 1) : 0;
  // enumerate supersets of the support within [n-1]
  std::uint32_t free_bits = full & ~support;
  std::uint32_t extra = 0;
  while (true) {
    SubsetMask s{n - 1, support | extra};
    const std::vector<int> seq = sequence_from_descents(s, n - 1);
    LaurentPoly term(parity_sign(s.count() + n + 1));
    for (int j = 0; j < n; ++j)
      term *= xplus1_pow(static_cast<unsigned>(seq[static_cast<std::size_t>(j)])) - one;
    total += term;
    if (extra == free_bits) break;
    extra = (extra - free_bits) & free_bits;  // next subset of the free positions
  }
  return divide_exact_x_power(total, n);
}

LaurentPoly fpoly(const NetflowVector& a) {
  const Composition alpha = reverse_composition(a);
  const int n = alpha.sum();
  const LaurentPoly x = LaurentPoly::variable();

  // x_i = (x+1)^i - (x+1) for i = 1..n
  EvaluationVector points;
  points.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    points.push_back(xplus1_pow(static_cast<unsigned>(i)) - xplus1_pow(1));

  LaurentPoly total;
  for (const Composition& beta : refinements(alpha)) {
    LaurentPoly term(parity_sign(n - beta.length()));
    term *= scaled_q_factorial(beta.length(), x);
    for (int i = 0; i < beta.length(); ++i)
      term *= points[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(beta.parts[i] - 1));
    total += term;
  }
  return LaurentPoly::monomial(1, -1) + divide_exact_x_power(total, n);
}

LaurentPoly fpoly_via_primitive(const NetflowVector& a) {
  const Composition alpha = reverse_composition(a);
  LaurentPoly total = LaurentPoly::monomial(1, -1);
  for (const Composition& beta : componentwise_downset(alpha))
    total += LaurentPoly(deletion_multiplicity(alpha, beta)) * primitive_fpoly(beta);
  return total;
}

LaurentPoly cry_fpoly(int n) {
  if (n < 1) throw std::invalid_argument("cry_fpoly requires n >= 1");
  const LaurentPoly x = LaurentPoly::variable();
  LaurentPoly total;
  // The m = n-1 term only matters for n = 1, where the complete homogeneous
  // sum over an empty value list is 1; for n >= 2 it vanishes.
  for (int m = 0; m <= n - 1; ++m) {
    const EvaluationVector points = qshift_points(n - m - 1);
    LaurentPoly term(parity_sign(m));
    term *= xplus1_pow(static_cast<unsigned>(m));
    term *= scaled_q_factorial(n - m, x);
    term *= complete_homogeneous(m, points);
    total += term;
  }
  return LaurentPoly::monomial(1, -1) + divide_exact_x_power(total, n);
}

LaurentPoly cry_primitive_fpoly(int n) {
  if (n < 1) throw std::invalid_argument("cry_primitive_fpoly requires n >= 1");
  const LaurentPoly x = LaurentPoly::variable();
  LaurentPoly total;
  for (int m = 0; m <= n - 1; ++m) {
    const EvaluationVector points = qshift_points(n - m);
    LaurentPoly term(parity_sign(m));
    term *= scaled_q_factorial(n - m, x);
    term *= complete_homogeneous(m, points);
    total += term;
  }
  return divide_exact_x_power(total, n);
}

BigInt cry_face_count_from_primitive(int n, int d) {
  if (n < 1) throw std::invalid_argument("cry_face_count_from_primitive requires n >= 1");
  BigInt total = 0;
  for (int i = 0; i <= n - 1; ++i)
    total += binomial(n - 1, i) * cry_primitive_fpoly(n - i).coeff(d);
  return total;
}

namespace {

BigInt alternating_sum_at(const Composition& alpha, std::span<const BigInt> pts) {
  const int n = alpha.sum();
  BigInt total = 0;
  for (const Composition& beta : refinements(alpha)) {
    BigInt term = parity_sign(n - beta.length());
    for (int i = 0; i < beta.length(); ++i)
      term *= int_pow(pts[static_cast<std::size_t>(i)], static_cast<unsigned>(beta.parts[i]));
    total += term;
  }
  return total;
}

}  // namespace

bool downset_refinement_identity_check(const Composition& alpha, int trials,
                                       std::uint64_t seed) {
  const int n = alpha.sum();
  if (n > 12)
    throw std::invalid_argument("identity check is limited to |alpha| <= 12");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<BigInt> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      pts.push_back(static_cast<long>(rng() % 41) - 20);

    BigInt lhs = 0;
    for (const Composition& beta : componentwise_downset(alpha)) {
      BigInt term = deletion_multiplicity(alpha, beta);
      term *= int_pow(pts[0], static_cast<unsigned>(n - beta.sum()));
      term *= alternating_sum_at(beta, pts);
      lhs += term;
    }

    BigInt rhs = 0;
    for (const Composition& beta : refinements(alpha)) {
      BigInt term = parity_sign(n - beta.length());
      for (int i = 0; i < beta.length(); ++i) {
        const BigInt& xi = pts[static_cast<std::size_t>(i)];
        term *= xi * int_pow(xi - pts[0], static_cast<unsigned>(beta.parts[i] - 1));
      }
      rhs += term;
    }

    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace flowface
