#include "flowface/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace flowface {

namespace {

constexpr int kHardMaxN = 7;  // 28 edges; a uint32_t bitset is the ceiling

// Per-vertex adjacency masks of a subgraph; vertex v_i is bit i-1.
struct Adjacency {
  std::uint16_t out[kHardMaxN + 1] = {};
  std::uint16_t in[kHardMaxN + 1] = {};
  std::uint16_t vertices = 0;

  void add_edge(int i, int j) {
    out[i - 1] |= static_cast<std::uint16_t>(1u << (j - 1));
    in[j - 1] |= static_cast<std::uint16_t>(1u << (i - 1));
    vertices |= static_cast<std::uint16_t>((1u << (i - 1)) | (1u << (j - 1)));
  }
};

Adjacency build_adjacency(const Subgraph& h) {
  Adjacency adj;
  std::uint32_t rest = h.edges;
  while (rest) {
    int k = std::countr_zero(rest);
    rest &= rest - 1;
    auto [i, j] = edge_endpoints(h.n, k);
    adj.add_edge(i, j);
  }
  return adj;
}

// Closure of `seed` under "bit v joins when mask_of[v] meets the set".
std::uint16_t closure(std::uint16_t seed, const std::uint16_t* mask_of, int nverts) {
  std::uint16_t set = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < nverts; ++v) {
      std::uint16_t bit = static_cast<std::uint16_t>(1u << v);
      if (!(set & bit) && (mask_of[v] & set)) {
        set |= bit;
        grew = true;
      }
    }
  }
  return set;
}

std::uint16_t supply_mask(const NetflowVector& a) {
  std::uint16_t m = 0;
  for (int i = 0; i < a.size(); ++i)
    if (a.bits()[static_cast<std::size_t>(i)]) m |= static_cast<std::uint16_t>(1u << i);
  return m;
}

bool valid_with_adjacency(const Subgraph& h, const Adjacency& adj, std::uint16_t supplies) {
  if (h.edges == 0) return false;
  const int nverts = h.n + 1;
  const std::uint16_t sink = static_cast<std::uint16_t>(1u << h.n);

  // vertices with a path to the sink (edges run tail -> head, so grow
  // backwards along out-masks)
  std::uint16_t to_sink = closure(sink, adj.out, nverts);
  if ((supplies & to_sink) != supplies) return false;

  std::uint16_t from_supply = closure(supplies, adj.in, nverts);

  std::uint32_t rest = h.edges;
  while (rest) {
    int k = std::countr_zero(rest);
    rest &= rest - 1;
    auto [i, j] = edge_endpoints(h.n, k);
    if (!(from_supply & (1u << (i - 1)))) return false;
    if (!(to_sink & (1u << (j - 1)))) return false;
  }
  return true;
}

int component_count(const Adjacency& adj, int nverts) {
  std::uint16_t und[kHardMaxN + 1];
  for (int v = 0; v < nverts; ++v)
    und[v] = static_cast<std::uint16_t>(adj.out[v] | adj.in[v]);
  std::uint16_t rest = adj.vertices;
  int c = 0;
  while (rest) {
    std::uint16_t seed = static_cast<std::uint16_t>(rest & (~rest + 1));
    std::uint16_t comp = closure(seed, und, nverts);
    rest = static_cast<std::uint16_t>(rest & ~comp);
    ++c;
  }
  return c;
}

void check_enumerable(const NetflowVector& a, const EnumerationOptions& opts) {
  if (a.size() > opts.max_n)
    throw std::domain_error("enumeration cap exceeded: n = " + std::to_string(a.size()) +
                            " > " + std::to_string(opts.max_n));
  if (a.size() > kHardMaxN)
    throw std::domain_error("subgraph bitsets only cover n <= " + std::to_string(kHardMaxN));
}

// Partition the subset index space into contiguous ranges, tally each range
// independently, and merge by addition; the result does not depend on the
// partitioning.
template <typename Visit>
void sweep_subsets(int n, int jobs, int max_betti, std::vector<long long>& totals,
                   Visit visit) {
  const std::uint64_t count = std::uint64_t{1} << edge_slots(n);
  totals.assign(static_cast<std::size_t>(max_betti) + 1, 0);
  jobs = std::max(1, std::min(jobs, 64));
  if (jobs == 1) {
    for (std::uint64_t m = 1; m < count; ++m) visit(static_cast<std::uint32_t>(m), totals);
    return;
  }
  std::vector<std::vector<long long>> partial(
      static_cast<std::size_t>(jobs),
      std::vector<long long>(static_cast<std::size_t>(max_betti) + 1, 0));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t lo = 1 + (count - 1) * w / jobs;
    const std::uint64_t hi = 1 + (count - 1) * (w + 1) / jobs;
    workers.emplace_back([&, lo, hi, w] {
      for (std::uint64_t m = lo; m < hi; ++m)
        visit(static_cast<std::uint32_t>(m), partial[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& p : partial)
    for (std::size_t d = 0; d < totals.size(); ++d) totals[d] += p[d];
}

BettiProfile tally(const NetflowVector& a, const EnumerationOptions& opts, bool primitive_only) {
  check_enumerable(a, opts);
  const int n = a.size();
  const std::uint16_t supplies = supply_mask(a);
  const std::uint16_t everyone = static_cast<std::uint16_t>((1u << (n + 1)) - 1);
  const int max_betti = edge_slots(n) - n;

  BettiProfile profile;
  sweep_subsets(n, opts.jobs, max_betti, profile.counts,
                [&](std::uint32_t mask, std::vector<long long>& counts) {
                  Subgraph h{n, mask};
                  Adjacency adj = build_adjacency(h);
                  if (primitive_only && adj.vertices != everyone) return;
                  if (!valid_with_adjacency(h, adj, supplies)) return;
                  const int edges = std::popcount(mask);
                  const int verts = std::popcount(adj.vertices);
                  const int comps = component_count(adj, n + 1);
                  if (primitive_only && comps != 1) return;
                  counts[static_cast<std::size_t>(edges - verts + comps)] += 1;
                });
  return profile;
}

}  // namespace

int edge_slots(int n) { return n * (n + 1) / 2; }

int edge_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n + 1)) throw std::invalid_argument("bad edge endpoints");
  return (i - 1) * (2 * (n + 1) - i) / 2 + (j - i - 1);
}

std::pair<int, int> edge_endpoints(int n, int k) {
  int i = 1;
  while (k >= n + 1 - i) {
    k -= n + 1 - i;
    ++i;
  }
  return {i, i + 1 + k};
}

long long BettiProfile::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

long long BettiProfile::at(int d) const {
  if (d < 0 || d >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(d)];
}

bool is_valid(const Subgraph& h, const NetflowVector& a) {
  if (h.n != a.size()) throw std::invalid_argument("subgraph order does not match netflow");
  return valid_with_adjacency(h, build_adjacency(h), supply_mask(a));
}

int betti_number(const Subgraph& h) {
  if (h.edges == 0) return 0;
  Adjacency adj = build_adjacency(h);
  return std::popcount(h.edges) - std::popcount(adj.vertices) + component_count(adj, h.n + 1);
}

bool is_primitive(const Subgraph& h) {
  Adjacency adj = build_adjacency(h);
  const std::uint16_t everyone = static_cast<std::uint16_t>((1u << (h.n + 1)) - 1);
  return adj.vertices == everyone && component_count(adj, h.n + 1) == 1;
}

BettiProfile tally_valid(const NetflowVector& a, const EnumerationOptions& opts) {
  return tally(a, opts, false);
}

BettiProfile tally_primitive_valid(const NetflowVector& a, const EnumerationOptions& opts) {
  return tally(a, opts, true);
}

FVector enumerate_fvector(const NetflowVector& a, const EnumerationOptions& opts) {
  BettiProfile profile = tally_valid(a, opts);
  std::vector<BigInt> entries;
  entries.reserve(profile.counts.size() + 1);
  entries.emplace_back(1);  // the empty subgraph is the empty face
  for (long long c : profile.counts) entries.emplace_back(c);
  return FVector(std::move(entries));
}

FVector enumerate_primitive_fvector(const NetflowVector& a, const EnumerationOptions& opts) {
  BettiProfile profile = tally_primitive_valid(a, opts);
  std::vector<BigInt> entries;
  entries.reserve(profile.counts.size() + 1);
  entries.emplace_back(0);
  for (long long c : profile.counts) entries.emplace_back(c);
  return FVector(std::move(entries));
}

std::vector<std::vector<long long>> vertex_tuples(const NetflowVector& a,
                                                  const EnumerationOptions& opts) {
  check_enumerable(a, opts);
  const int n = a.size();
  const std::uint16_t supplies = supply_mask(a);
  const std::uint64_t count = std::uint64_t{1} << edge_slots(n);

  std::vector<std::vector<long long>> tuples;
  for (std::uint64_t m = 1; m < count; ++m) {
    Subgraph h{n, static_cast<std::uint32_t>(m)};
    Adjacency adj = build_adjacency(h);
    if (!valid_with_adjacency(h, adj, supplies)) continue;
    const int comps = component_count(adj, n + 1);
    if (std::popcount(h.edges) - std::popcount(adj.vertices) + comps != 0) continue;

    // A Betti-0 valid subgraph is a tree in which every non-sink vertex has
    // exactly one out-edge, so the realizing flow is unique: push each
    // vertex's accumulated inflow plus its supply along that edge.
    int next[kHardMaxN + 1] = {};
    long long edge_flow[kHardMaxN + 1] = {};  // flow on v's out-edge, by tail v
    long long inflow[kHardMaxN + 2] = {};
    for (int v = 1; v <= n; ++v) {
      if (!(adj.vertices & (1u << (v - 1)))) continue;
      std::uint16_t mask = adj.out[v - 1];
      next[v] = std::countr_zero(mask) + 1;
      long long f = inflow[v] + a.bits()[static_cast<std::size_t>(v - 1)];
      edge_flow[v] = f;
      inflow[next[v]] += f;
    }

    std::vector<long long> tuple(static_cast<std::size_t>(n - 1), 0);
    for (int i = 2; i <= n; ++i) {
      if (!(adj.vertices & (1u << (i - 1)))) continue;
      const int interval_end = next[i] - 1;  // interval [v_i, v_{next[i]-1}]
      long long s = 0;
      for (int u = 1; u < i; ++u) {
        if (!(adj.vertices & (1u << (u - 1)))) continue;
        if (next[u] >= i && next[u] <= interval_end) s += edge_flow[u];
      }
      tuple[static_cast<std::size_t>(i - 2)] = s;
    }
    tuples.push_back(std::move(tuple));
  }
  return tuples;
}

namespace {

std::vector<Subgraph> collect(const NetflowVector& a, const EnumerationOptions& opts,
                              bool primitive_only) {
  check_enumerable(a, opts);
  const int n = a.size();
  const std::uint16_t supplies = supply_mask(a);
  const std::uint16_t everyone = static_cast<std::uint16_t>((1u << (n + 1)) - 1);
  const std::uint64_t count = std::uint64_t{1} << edge_slots(n);

  std::vector<Subgraph> out;
  for (std::uint64_t m = 1; m < count; ++m) {
    Subgraph h{n, static_cast<std::uint32_t>(m)};
    Adjacency adj = build_adjacency(h);
    if (primitive_only &&
        (adj.vertices != everyone || component_count(adj, n + 1) != 1))
      continue;
    if (valid_with_adjacency(h, adj, supplies)) out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<Subgraph> valid_subgraphs(const NetflowVector& a, const EnumerationOptions& opts) {
  return collect(a, opts, false);
}

std::vector<Subgraph> primitive_valid_subgraphs(const NetflowVector& a,
                                                const EnumerationOptions& opts) {
  return collect(a, opts, true);
}

}  // namespace flowface
