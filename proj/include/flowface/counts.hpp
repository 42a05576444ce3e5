#pragma once

#include <vector>

#include "flowface/bigint.hpp"
#include "flowface/compositions.hpp"

namespace flowface {

/// Number of vertices of CRY_n: 2^{n-1}.
BigInt cry_vertex_count(int n);

/// Number of edges (1-dimensional faces) of CRY_n: 2*3^{n-1} - (n+3)*2^{n-2}.
/// Requires n >= 2.
BigInt cry_edge_count(int n);

/// Number of vertices of Flow_n(a): the product over j = 1..n-1 of
/// (1 + number of supply entries among a_1..a_j).
BigInt flow_vertex_count(const NetflowVector& a);

/// Coefficients of prod_{k>=1} (1 - x^k)^2 up to the requested degree: the
/// signed count of partitions into distinct bicolored parts.
struct BicoloredPartitionCoeffs {
  std::vector<BigInt> coeffs;  // coeffs[i] = [x^i]

  const BigInt& at(int i) const;
};

BicoloredPartitionCoeffs bicolored_partition_coeffs(int max_degree);

/// Number of codimension-d faces of CRY_n for 1 <= d <= n-1, by
/// inclusion-exclusion over edge deletions from K_{n+1}:
/// sum_i a_i * C(E - i, d - i) with E = C(n+1, 2). Equals the primitive
/// f-vector entry at dimension C(n,2) - d on that whole range, and the full
/// f-vector entry for d <= n-2.
BigInt low_codim_face_count(int n, int d);

}  // namespace flowface
