#pragma once

#include "flowface/laurent.hpp"

namespace flowface {

/// Two-variable face generating function for CRY, truncated in t:
/// F(t,x) = 1/(x - xt)
///        + sum_n t^n x^{-n} prod_{i=1..n} ((1+x)^i - 1) / (1 + ((1+x)^i - 1 - x) t x^{-1}).
/// The coefficient of t^n is the CRY_n f-polynomial.
TruncatedSeries cry_face_series(int order);

/// Specialization request for the five-parameter Fishburn generating
/// function: truncation order and values for (v, w, x, y).
struct SeriesRequest {
  int order = 0;
  LaurentPoly v, w, x, y;
};

/// G(t,v,w,x,y) = sum_n t^{n+1} ((x+1)(y+1)^n - 1) / (1 + t((v+1)(w+1)^n - 1))
///                * prod_{i=0}^{n-1} ((v+1)(w+1)^i - 1) / (1 + t((v+1)(w+1)^i - 1)),
/// counting primitive Fishburn matrices by five statistics. With all four
/// parameters set to x, the coefficient of t^n is x^n times the primitive
/// CRY_n f-polynomial (the matrix statistic counts all 1-entries, which
/// exceeds the Betti number by n).
TruncatedSeries jelinek_series(const SeriesRequest& req);

/// The primitive CRY_n f-polynomial extracted from a G(t,x,x,x,x) expansion:
/// x^{-n} [t^n] G, with the exactness of the shift checked.
LaurentPoly jelinek_primitive_fpoly(const TruncatedSeries& g, int n);

/// x * f^{(n)} == (1+x)^n * ftilde^{(n-1)}, exactly. Holds for all n >= 2.
bool product_identity_check(int n);

/// The same identity with the indices placed as
/// x * f^{(n)} == (1+x)^{n-1} * ftilde^{(n)}; true at n = 2 by coincidence
/// and false from n = 3 on.
bool product_identity_alt_check(int n);

}  // namespace flowface
