#pragma once

#include <vector>

#include "flowface/bigint.hpp"
#include "flowface/laurent.hpp"

namespace flowface {

/// Face counts by dimension, starting at d = -1 (the empty face).
/// Canonical form has no trailing zero entries, so equality is structural.
struct FVector {
  std::vector<BigInt> entries;  // entries[k] counts faces of dimension k-1

  FVector() = default;
  explicit FVector(std::vector<BigInt> e);

  /// Count at dimension d (zero outside the stored range).
  const BigInt& at_dim(int d) const;
  int top_dim() const { return static_cast<int>(entries.size()) - 2; }

  /// Requires lowest exponent >= -1.
  static FVector from_poly(const LaurentPoly& p);
  LaurentPoly to_poly() const;

  bool operator==(const FVector&) const = default;
};

}  // namespace flowface
