#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "flowface/compositions.hpp"
#include "test_helpers.hpp"

using namespace flowface;
using flowface::testing::comp;
using flowface::testing::nf;

TEST_CASE("reverse composition reads blocks right to left") {
  CHECK(reverse_composition(nf({1, 1, 0, 0, 1, 0, 1, 0})) == comp({2, 2, 3, 1}));
  CHECK(reverse_composition(nf({1})) == comp({1}));
  CHECK(reverse_composition(nf({1, 0, 0})) == comp({3}));
  CHECK_THROWS_AS(NetflowVector({0, 1}), std::invalid_argument);
}

TEST_CASE("netflow canonicalization to support") {
  CHECK(NetflowVector::from_entries({2, 0, 5}) == nf({1, 0, 1}));
  CHECK_THROWS_AS(NetflowVector::from_entries({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(NetflowVector::from_entries({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(NetflowVector::from_entries({}), std::invalid_argument);
}

TEST_CASE("signature reads blocks left to right") {
  CHECK(signature(nf({1, 0, 0, 0})) == comp({4}));
  CHECK(signature(nf({1, 1, 1, 0})) == comp({1, 1, 2}));
  CHECK(signature(nf({1, 1})) == comp({1, 1}));
}

TEST_CASE("reverse composition is a bijection for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    std::set<Composition> seen;
    for (const NetflowVector& a : all_binary_netflows(n)) {
      const Composition alpha = reverse_composition(a);
      CHECK(alpha.sum() == n);
      CHECK(alpha.length() == a.ones());  // the two notions of size swap
      CHECK(a.size() == alpha.sum());
      CHECK(netflow_from_composition(alpha) == a);
      seen.insert(alpha);
    }
    CHECK(static_cast<int>(seen.size()) == 1 << (n - 1));
  }
}

TEST_CASE("sequences from descent sets") {
  CHECK(sequence_from_descents(SubsetMask{4, 0b0011}, 4) ==
        std::vector<int>{3, 2, 1, 1, 1});
  CHECK(sequence_from_descents(SubsetMask{4, 0b1100}, 4) ==
        std::vector<int>{3, 3, 3, 2, 1});
  CHECK(sequence_from_descents(SubsetMask{4, 0b0101}, 4) ==
        std::vector<int>{3, 2, 2, 1, 1});
  CHECK(sequence_from_descents(SubsetMask{4, 0b1001}, 4) ==
        std::vector<int>{3, 2, 2, 2, 1});
  CHECK(sequence_from_descents(SubsetMask{4, 0b0110}, 4) ==
        std::vector<int>{3, 3, 2, 1, 1});
  CHECK(sequence_from_descents(SubsetMask{4, 0b1010}, 4) ==
        std::vector<int>{3, 3, 2, 2, 1});
  CHECK(sequence_from_descents(SubsetMask{5, 0}, 5) ==
        std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("descents invert sequence_from_descents exhaustively for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const SubsetMask s{n, mask};
      const std::vector<int> seq = sequence_from_descents(s, n);
      CHECK(descents(seq) == s);
      // shape: non-increasing with steps in {0,1}, first entry |S|+1, last 1
      CHECK(seq.front() == s.count() + 1);
      CHECK(seq.back() == 1);
      for (std::size_t j = 1; j < seq.size(); ++j) {
        CHECK(seq[j - 1] >= seq[j]);
        CHECK(seq[j - 1] - seq[j] <= 1);
      }
    }
  }
}

TEST_CASE("refinements of a composition") {
  CHECK(refinements(comp({2})) == std::vector<Composition>{comp({1, 1}), comp({2})});
  CHECK(refinements(comp({2, 1})) ==
        std::vector<Composition>{comp({1, 1, 1}), comp({2, 1})});
  CHECK(refinements(comp({3})).size() == 4);  // compositions of 3
}

TEST_CASE("componentwise downsets") {
  CHECK(componentwise_downset(comp({2, 2})) ==
        std::vector<Composition>{comp({1, 1}), comp({1, 2}), comp({2, 1}), comp({2, 2})});
  CHECK(componentwise_downset(comp({1, 1, 1})) ==
        std::vector<Composition>{comp({1, 1, 1})});
  CHECK(componentwise_downset(comp({3, 2})).size() == 6);
}

TEST_CASE("iteration counts match the product formulas for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const NetflowVector& a : all_binary_netflows(n)) {
      const Composition alpha = reverse_composition(a);
      std::size_t expected_ref = 1, expected_down = 1;
      for (int part : alpha.parts) {
        expected_ref <<= part - 1;
        expected_down *= static_cast<std::size_t>(part);
      }
      const auto refs = refinements(alpha);
      const auto downs = componentwise_downset(alpha);
      CHECK(refs.size() == expected_ref);
      CHECK(downs.size() == expected_down);
      CHECK(std::is_sorted(refs.begin(), refs.end()));
      CHECK(std::is_sorted(downs.begin(), downs.end()));
      for (const Composition& beta : refs) CHECK(beta.sum() == n);
      for (const Composition& beta : downs) CHECK(beta.length() == alpha.length());
    }
  }
}

TEST_CASE("deletion multiplicities") {
  const Composition alpha = reverse_composition(nf({1, 0, 0, 1, 1, 0}));
  const Composition beta = reverse_composition(nf({1, 0, 1, 1, 0}));
  CHECK(alpha == comp({2, 1, 3}));
  CHECK(beta == comp({2, 1, 2}));
  CHECK(deletion_multiplicity(alpha, beta) == 2);
  CHECK(deletion_multiplicity(alpha, alpha) == 1);
  CHECK(deletion_multiplicity(comp({3}), comp({2})) == 2);
  CHECK_THROWS_AS(deletion_multiplicity(comp({2, 1}), comp({2})), std::invalid_argument);
  CHECK_THROWS_AS(deletion_multiplicity(comp({2}), comp({3})), std::invalid_argument);
}

TEST_CASE("compositions_of is lexicographic and complete") {
  const auto cs = compositions_of(4);
  CHECK(cs.size() == 8);
  CHECK(std::is_sorted(cs.begin(), cs.end()));
  CHECK(cs.front() == comp({1, 1, 1, 1}));
  CHECK(cs.back() == comp({4}));
}
