#pragma once

#include "rklat/bigint.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rklat {

using IdPair = std::pair<std::string, std::string>;

class LabeledPreorder;

namespace detail {
/// Internal constructor for callers that already hold a reflexive-transitive
/// closure. No validation beyond size agreement.
LabeledPreorder assemble(std::vector<std::string> ids, std::vector<BigInt> il,
                         std::vector<boost::dynamic_bitset<>> rows);
}  // namespace detail

/// A finite reflexive-transitive relation over named nodes, each node carrying
/// an exact non-negative count of limit models (its IL value). Immutable after
/// construction; all operations on it are pure functions.
class LabeledPreorder {
 public:
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& node_ids() const { return ids_; }
  const std::string& id_of(std::size_t i) const { return ids_[i]; }

  /// Index of a node by identifier; throws validation_error when unknown.
  std::size_t index_of(std::string_view id) const;
  bool has_node(std::string_view id) const;

  bool leq(std::size_t lo, std::size_t hi) const { return rows_[lo].test(hi); }
  bool leq(std::string_view lo, std::string_view hi) const;

  const BigInt& il(std::size_t i) const { return il_[i]; }
  const BigInt& il(std::string_view id) const { return il_[index_of(id)]; }
  BigInt il_sum() const;

  /// True when no two distinct nodes dominate each other, i.e. the relation is
  /// a partial order.
  bool is_antisymmetric() const;

  /// All pairs (x, y) with x <= y and x != y, in node-index order. Together
  /// with the node list this regenerates the structure exactly.
  std::vector<IdPair> strict_pairs() const;

  friend bool operator==(const LabeledPreorder& a, const LabeledPreorder& b);

 private:
  LabeledPreorder() = default;

  std::vector<std::string> ids_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<BigInt> il_;
  std::vector<boost::dynamic_bitset<>> rows_;  // closure, one row per node

  friend LabeledPreorder detail::assemble(std::vector<std::string>,
                                          std::vector<BigInt>,
                                          std::vector<boost::dynamic_bitset<>>);
};

/// Builds a labeled preorder from generator pairs: the stored relation is the
/// reflexive-transitive closure of `pairs`. Throws validation_error on an
/// empty node list, duplicate identifiers, labels or pairs over unknown
/// nodes, a missing label, or a negative label.
LabeledPreorder make_preorder(std::vector<std::string> nodes,
                              const std::vector<IdPair>& pairs,
                              const std::map<std::string, BigInt>& il);

/// Collapses every mutual-domination class (x <= y and y <= x) to a single
/// node named after its lexicographically least member; class IL values are
/// the sums over members. The result is a partial order; inputs that already
/// are partial orders come back unchanged.
LabeledPreorder quotient_rk(const LabeledPreorder& p);

/// Covering pairs (x, y) of a partial order: x < y with nothing strictly
/// between. Sorted lexicographically by identifier. Throws validation_error
/// when the input is not antisymmetric (quotient first).
std::vector<IdPair> hasse_edges(const LabeledPreorder& p);

/// Componentwise (Pareto) order on the cartesian product of two preorders:
/// (x1,y1) <= (x2,y2) iff x1 <= x2 and y1 <= y2. Labels compose as
/// il = (il_p + 1) * (il_q + 1) - 1; identifiers as join_ids(p-id, q-id).
LabeledPreorder pareto_product(const LabeledPreorder& p,
                               const LabeledPreorder& q);

/// Label-preserving order isomorphism, one pair per p-node in p's node order.
struct IsoWitness {
  std::vector<IdPair> mapping;
};

/// Searches for an IL-preserving order isomorphism between two partial
/// orders. Backtracking pruned by the node signature (IL value, strict
/// predecessor count, strict successor count); candidate targets are tried
/// sorted by (IL, predecessors, successors, identifier), so the returned
/// witness is deterministic. Returns nullopt when none exists.
std::optional<IsoWitness> are_isomorphic(const LabeledPreorder& p,
                                         const LabeledPreorder& q);

/// Joins two node identifiers into a product identifier. The separator ','
/// is reserved; occurrences of it (and of the escape character '\') inside
/// either constituent are escaped, so distinct inputs give distinct outputs.
std::string join_ids(std::string_view left, std::string_view right);

}  // namespace rklat
