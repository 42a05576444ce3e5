#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flowface/compositions.hpp"
#include "flowface/fvector.hpp"

namespace flowface {

/// Edge subset of the transitively directed complete graph K_{n+1} on
/// vertices v_1..v_{n+1} (edges (i, j) for i < j). Edges are stored as a
/// fixed-width bitset in lexicographic (i, j) order; the vertex set is the
/// set of endpoints of present edges.
struct Subgraph {
  int n = 0;
  std::uint32_t edges = 0;

  auto operator<=>(const Subgraph&) const = default;
};

int edge_slots(int n);                             // n(n+1)/2
int edge_index(int n, int i, int j);               // 1 <= i < j <= n+1
std::pair<int, int> edge_endpoints(int n, int k);  // inverse of edge_index

/// Whether H is the support of some a-flow. Decided by reachability: every
/// supply vertex must reach v_{n+1} inside H, and every edge must have its
/// tail reachable from a supply (or be one) and its head reaching v_{n+1}.
/// Sufficiency: route each supply along a path to the sink, then superpose
/// a small amount of flow through every edge along such a supply-to-sink
/// path; on a DAG with one sink this realizes exactly the support H.
/// Necessity: decompose any realizing flow into supply-to-sink paths.
/// The empty subgraph is never a-valid here (a_1 = 1); it is accounted for
/// separately as the empty face.
bool is_valid(const Subgraph& h, const NetflowVector& a);

/// |E(H)| - |V(H)| + c(H) with c counting weakly connected components on the
/// endpoint vertex set. Equals the dimension of the corresponding face.
int betti_number(const Subgraph& h);

/// Uses all n+1 vertices and is weakly connected.
bool is_primitive(const Subgraph& h);

struct EnumerationOptions {
  int max_n = 6;  // refuse exhaustive sweeps beyond this order
  int jobs = 1;
};

/// Counts of enumerated subgraphs keyed by first Betti number.
struct BettiProfile {
  std::vector<long long> counts;  // counts[d] = subgraphs with Betti number d

  long long total() const;
  long long at(int d) const;
};

BettiProfile tally_valid(const NetflowVector& a, const EnumerationOptions& opts = {});
BettiProfile tally_primitive_valid(const NetflowVector& a,
                                   const EnumerationOptions& opts = {});

/// Full sweep over all 2^{n(n+1)/2} edge subsets, tallied by Betti number.
/// Entry -1 is 1 (the empty subgraph is the empty face).
FVector enumerate_fvector(const NetflowVector& a, const EnumerationOptions& opts = {});

/// Same sweep restricted to primitive subgraphs; entry -1 is 0.
FVector enumerate_primitive_fvector(const NetflowVector& a,
                                    const EnumerationOptions& opts = {});

/// For every Betti-0 valid subgraph (a vertex of the polytope), the tuple
/// (s_1, ..., s_{n-1}) where s_{i-1} is the flow entering the interval from
/// v_i up to just before the head of v_i's out-edge, counting only flow on
/// edges (not netflow supplies); zero for vertices outside the subgraph.
std::vector<std::vector<long long>> vertex_tuples(const NetflowVector& a,
                                                  const EnumerationOptions& opts = {});

std::vector<Subgraph> valid_subgraphs(const NetflowVector& a,
                                      const EnumerationOptions& opts = {});
std::vector<Subgraph> primitive_valid_subgraphs(const NetflowVector& a,
                                                const EnumerationOptions& opts = {});

}  // namespace flowface
