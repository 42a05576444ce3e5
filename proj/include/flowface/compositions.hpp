#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "flowface/bigint.hpp"

namespace flowface {

/// Ordered tuple of positive integer parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  int sum() const;

  auto operator<=>(const Composition&) const = default;
};

/// Binary netflow vector (a_1, ..., a_n) with a_1 = 1. Arbitrary nonnegative
/// entries are accepted through from_entries and canonicalized to their
/// support; the face structure depends only on which entries are nonzero.
class NetflowVector {
 public:
  explicit NetflowVector(std::vector<int> bits);
  static NetflowVector from_entries(const std::vector<long long>& entries);

  int size() const { return static_cast<int>(bits_.size()); }
  int ones() const;
  const std::vector<int>& bits() const { return bits_; }

  auto operator<=>(const NetflowVector&) const = default;

 private:
  std::vector<int> bits_;
};

/// Subset of {1, ..., universe}, stored as a bitmask (bit k-1 = element k).
struct SubsetMask {
  int universe = 0;
  std::uint32_t mask = 0;

  bool contains(int element) const { return (mask >> (element - 1)) & 1u; }
  int count() const;
  std::vector<int> elements() const;

  auto operator<=>(const SubsetMask&) const = default;
};

/// Block sizes of a, read right to left, where a block is a 1 together with
/// the zeros trailing it. A composition of n with one part per 1 in a.
Composition reverse_composition(const NetflowVector& a);

/// Block sizes read left to right (same block convention).
Composition signature(const NetflowVector& a);

/// Inverse of reverse_composition.
NetflowVector netflow_from_composition(const Composition& alpha);

/// The non-increasing sequence of length n+1 with descent set S:
/// entry j is 1 + #{s in S : s >= j}.
std::vector<int> sequence_from_descents(const SubsetMask& s, int n);

/// Descent set of a sequence (indices j with seq[j] > seq[j+1], 1-based).
SubsetMask descents(const std::vector<int>& seq);

/// Every composition refining alpha (each part independently replaced by a
/// composition of it, concatenated in order). Lexicographic on part
/// sequences; size = prod 2^{alpha_i - 1}.
std::vector<Composition> refinements(const Composition& alpha);

/// Every beta of the same length with 1 <= beta_i <= alpha_i, lexicographic;
/// size = prod alpha_i.
std::vector<Composition> componentwise_downset(const Composition& alpha);

/// Number of ways of deleting zeros from the netflow vector of alpha to
/// reach that of beta: prod C(alpha_i - 1, alpha_i - beta_i).
/// Requires equal lengths and beta <= alpha componentwise.
BigInt deletion_multiplicity(const Composition& alpha, const Composition& beta);

/// All compositions of n, lexicographic.
std::vector<Composition> compositions_of(int n);

/// All 2^{n-1} binary netflow vectors of length n with a_1 = 1, sorted.
std::vector<NetflowVector> all_binary_netflows(int n);

}  // namespace flowface
