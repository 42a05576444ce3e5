#include "flowface/counts.hpp"

#include <stdexcept>

namespace flowface {

BigInt cry_vertex_count(int n) {
  if (n < 1) throw std::invalid_argument("cry_vertex_count requires n >= 1");
  return int_pow(2, static_cast<unsigned>(n - 1));
}

BigInt cry_edge_count(int n) {
  if (n < 2) throw std::invalid_argument("cry_edge_count requires n >= 2");
  return 2 * int_pow(3, static_cast<unsigned>(n - 1)) -
         BigInt(n + 3) * int_pow(2, static_cast<unsigned>(n - 2));
}

BigInt flow_vertex_count(const NetflowVector& a) {
  BigInt r = 1;
  int supplies = 0;
  for (int j = 1; j <= a.size() - 1; ++j) {
    supplies += a.bits()[static_cast<std::size_t>(j - 1)];
    r *= supplies + 1;
  }
  return r;
}

const BigInt& BicoloredPartitionCoeffs::at(int i) const {
  static const BigInt kZero = 0;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return kZero;
  return coeffs[static_cast<std::size_t>(i)];
}

BicoloredPartitionCoeffs bicolored_partition_coeffs(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(max_degree) + 1);
  c[0] = 1;
  for (int k = 1; k <= max_degree; ++k) {
    // multiply twice by (1 - x^k), truncating at max_degree
    for (int pass = 0; pass < 2; ++pass)
      for (int d = max_degree; d >= k; --d) c[d] -= c[d - k];
  }
  return BicoloredPartitionCoeffs{std::move(c)};
}

BigInt low_codim_face_count(int n, int d) {
  if (d < 1 || d > n - 1)
    throw std::invalid_argument("codimension must satisfy 1 <= d <= n-1");
  const long edge_count = static_cast<long>(n + 1) * n / 2;
  const BicoloredPartitionCoeffs a = bicolored_partition_coeffs(d);
  BigInt total = 0;
  for (int i = 0; i <= d; ++i) total += a.at(i) * binomial(edge_count - i, d - i);
  return total;
}

}  // namespace flowface
