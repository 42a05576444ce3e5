#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flowface/compositions.hpp"
#include "flowface/fvector.hpp"
#include "flowface/laurent.hpp"

namespace flowface {

/// Values substituted for the formal slots x_1, x_2, ... of the formula
/// engines (and x_0 where one is required).
using EvaluationVector = std::vector<LaurentPoly>;

/// Complete homogeneous sum of degree m over the supplied values: the sum of
/// all products v_{i_1}...v_{i_m} with weakly increasing indices.
LaurentPoly complete_homogeneous(int m, std::span<const LaurentPoly> values);

/// sum over beta refining alpha of (-1)^{|alpha| - l(beta)} prod v_i^{beta_i}.
/// Needs |alpha| slots, since the finest refinement has |alpha| parts.
LaurentPoly composition_alternating_sum(const Composition& alpha,
                                        std::span<const LaurentPoly> values);

/// Primitive f-polynomial of Flow_n(a) for the composition alpha of n that
/// encodes a: the alternating refinement sum at x_i = (x+1)^i - 1, divided
/// exactly by x^n. Betti numbers of primitive valid subgraphs, graded by x.
LaurentPoly primitive_fpoly(const Composition& alpha);
LaurentPoly primitive_fpoly(const NetflowVector& a);

/// Same polynomial by inclusion-exclusion over supersets of the support of
/// (a_2, ..., a_n); an independent route used for cross-validation.
LaurentPoly primitive_fpoly_by_subsets(const NetflowVector& a);

/// f-polynomial of Flow_n(a): 1/x for the empty face plus the signed sum
/// over refinements of reverse_composition(a), evaluated at
/// x_i = (x+1)^i - (x+1) with the scaled q-factorial weight.
LaurentPoly fpoly(const NetflowVector& a);

/// f-polynomial assembled from primitive ones over the componentwise
/// downset, weighted by deletion multiplicities. Must equal fpoly(a).
LaurentPoly fpoly_via_primitive(const NetflowVector& a);

/// CRY_n = Flow_n(1,0,...,0) specializations via complete homogeneous sums.
LaurentPoly cry_fpoly(int n);
LaurentPoly cry_primitive_fpoly(int n);

/// Entry f_d of the CRY_n f-vector from primitive entries:
/// sum_i C(n-1, i) * ftilde^{(n-i)}_d. Valid for d >= 0.
BigInt cry_face_count_from_primitive(int n, int d);

/// Randomized check of the multivariate identity linking the downset
/// expansion with the refinement product form: both sides are evaluated at
/// `trials` integer points with coordinates in [-20, 20]. Deterministic in
/// the seed; true iff every evaluation agrees. Both sides enumerate
/// refinements, so sizes are guarded (|alpha| <= 12).
bool downset_refinement_identity_check(const Composition& alpha, int trials,
                                       std::uint64_t seed = 0x5eed5eedu);

}  // namespace flowface
