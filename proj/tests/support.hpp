#pragma once

#include "rklat/preorder.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace support {

using rklat::IdPair;
using rklat::LabeledPreorder;

inline std::uint64_t upow(std::uint64_t base, unsigned exp) {
  std::uint64_t acc = 1;
  while (exp--) acc *= base;
  return acc;
}

/// Cover count of the canonical lattice, counted directly: an edge raises one
/// of the k two-level digits (the rest of the lattice is free) or one of the
/// s three-level digits (two levels to raise from).
inline std::uint64_t cover_count(unsigned k, unsigned s) {
  std::uint64_t total = 0;
  if (k > 0) total += k * upow(2, k - 1) * upow(3, s);
  if (s > 0) total += 2ull * s * upow(3, s - 1) * upow(2, k);
  return total;
}

/// Full audit of an isomorphism witness, independent of the search that
/// produced it: a bijection between the node sets that agrees with the order
/// in both directions on every pair and carries labels exactly.
inline bool witness_ok(const LabeledPreorder& p, const LabeledPreorder& q,
                       const std::vector<IdPair>& mapping) {
  if (mapping.size() != p.size() || p.size() != q.size()) return false;
  std::set<std::string> sources, targets;
  for (const auto& [from, to] : mapping) {
    if (!p.has_node(from) || !q.has_node(to)) return false;
    sources.insert(from);
    targets.insert(to);
    if (p.il(from) != q.il(to)) return false;
  }
  if (sources.size() != p.size() || targets.size() != q.size()) return false;
  for (const auto& [f1, t1] : mapping)
    for (const auto& [f2, t2] : mapping) {
      if (p.leq(f1, f2) != q.leq(t1, t2)) return false;
      if (p.leq(f2, f1) != q.leq(t2, t1)) return false;
    }
  return true;
}

}  // namespace support
