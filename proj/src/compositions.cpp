#include "flowface/compositions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace flowface {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int part : parts)
    if (part < 1) throw std::invalid_argument("composition parts must be >= 1");
}

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

NetflowVector::NetflowVector(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("netflow vector must be nonempty");
  for (int b : bits_)
    if (b != 0 && b != 1) throw std::invalid_argument("netflow bits must be 0 or 1");
  if (bits_.front() != 1) throw std::invalid_argument("netflow vector must start with 1");
}

NetflowVector NetflowVector::from_entries(const std::vector<long long>& entries) {
  std::vector<int> bits;
  bits.reserve(entries.size());
  for (long long e : entries) {
    if (e < 0) throw std::invalid_argument("netflow entries must be nonnegative");
    bits.push_back(e != 0 ? 1 : 0);
  }
  return NetflowVector(std::move(bits));
}

int NetflowVector::ones() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

int SubsetMask::count() const { return std::popcount(mask); }

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int k = 1; k <= universe; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

Composition signature(const NetflowVector& a) {
  std::vector<int> blocks;
  for (int b : a.bits()) {
    if (b == 1)
      blocks.push_back(1);
    else
      blocks.back() += 1;  // a_1 = 1, so there is always an open block
  }
  return Composition(std::move(blocks));
}

Composition reverse_composition(const NetflowVector& a) {
  Composition sig = signature(a);
  std::reverse(sig.parts.begin(), sig.parts.end());
  return sig;
}

NetflowVector netflow_from_composition(const Composition& alpha) {
  std::vector<int> bits;
  bits.reserve(alpha.sum());
  for (auto it = alpha.parts.rbegin(); it != alpha.parts.rend(); ++it) {
    bits.push_back(1);
    bits.insert(bits.end(), *it - 1, 0);
  }
  return NetflowVector(std::move(bits));
}

std::vector<int> sequence_from_descents(const SubsetMask& s, int n) {
  if (s.universe != n) throw std::invalid_argument("subset universe mismatch");
  std::vector<int> seq(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n + 1; ++j) {
    int above = 0;
    for (int k = j; k <= n; ++k)
      if (s.contains(k)) ++above;
    seq[j - 1] = 1 + above;
  }
  return seq;
}

SubsetMask descents(const std::vector<int>& seq) {
  SubsetMask s{static_cast<int>(seq.size()) - 1, 0};
  for (int j = 1; j < static_cast<int>(seq.size()); ++j)
    if (seq[j - 1] > seq[j]) s.mask |= 1u << (j - 1);
  return s;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  // depth-first with parts tried in increasing order yields lexicographic output
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<std::vector<Composition>> per_part;
  per_part.reserve(alpha.parts.size());
  for (int part : alpha.parts) per_part.push_back(compositions_of(part));

  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == per_part.size()) {
      out.push_back(Composition(cur));
      return;
    }
    for (const Composition& piece : per_part[idx]) {
      cur.insert(cur.end(), piece.parts.begin(), piece.parts.end());
      self(self, idx + 1);
      cur.resize(cur.size() - piece.parts.size());
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> componentwise_downset(const Composition& alpha) {
  std::vector<Composition> out;
  std::vector<int> cur(alpha.parts.size(), 1);
  if (alpha.parts.empty()) {
    out.emplace_back();
    return out;
  }
  while (true) {
    out.push_back(Composition(cur));
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && cur[i] == alpha.parts[i]) {
      cur[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt deletion_multiplicity(const Composition& alpha, const Composition& beta) {
  if (alpha.length() != beta.length())
    throw std::invalid_argument("compositions must have equal length");
  BigInt r = 1;
  for (int i = 0; i < alpha.length(); ++i) {
    if (beta.parts[i] > alpha.parts[i])
      throw std::invalid_argument("beta must be componentwise <= alpha");
    r *= binomial(alpha.parts[i] - 1, alpha.parts[i] - beta.parts[i]);
  }
  return r;
}

std::vector<NetflowVector> all_binary_netflows(int n) {
  if (n < 1) throw std::invalid_argument("netflow length must be >= 1");
  std::vector<NetflowVector> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint32_t tail = 0; tail < (1u << (n - 1)); ++tail) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    bits[0] = 1;
    for (int k = 1; k < n; ++k) bits[k] = (tail >> (k - 1)) & 1u;
    out.emplace_back(std::move(bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flowface
