#include "flowface/fvector.hpp"

#include <stdexcept>

namespace flowface {

FVector::FVector(std::vector<BigInt> e) : entries(std::move(e)) {
  while (!entries.empty() && entries.back() == 0) entries.pop_back();
}

const BigInt& FVector::at_dim(int d) const {
  static const BigInt kZero = 0;
  int idx = d + 1;
  if (idx < 0 || idx >= static_cast<int>(entries.size())) return kZero;
  return entries[static_cast<std::size_t>(idx)];
}

FVector FVector::from_poly(const LaurentPoly& p) {
  if (p.is_zero()) return FVector{};
  if (p.lowest() < -1) throw std::invalid_argument("f-polynomial exponent below -1");
  std::vector<BigInt> e(static_cast<std::size_t>(p.degree() + 2));
  for (const auto& [exp, c] : p.terms()) e[static_cast<std::size_t>(exp + 1)] = c;
  return FVector(std::move(e));
}

LaurentPoly FVector::to_poly() const {
  LaurentPoly p;
  for (int k = 0; k < static_cast<int>(entries.size()); ++k)
    p += LaurentPoly::monomial(entries[static_cast<std::size_t>(k)], k - 1);
  return p;
}

}  // namespace flowface
