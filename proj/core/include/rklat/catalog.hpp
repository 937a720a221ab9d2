#pragma once

#include "rklat/bigint.hpp"
#include "rklat/preorder.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rklat {

/// Shape parameters of a canonical theory: k independent two-level factors
/// and s independent three-level factors.
struct TheorySignature {
  unsigned k = 0;
  unsigned s = 0;

  friend auto operator<=>(const TheorySignature&,
                          const TheorySignature&) = default;
};

/// A node of the canonical lattice for some signature: one digit per factor,
/// a[i] in {0,1} for the two-level factors and b[j] in {0,1,2} for the
/// three-level ones.
struct NodeCoord {
  std::vector<std::uint8_t> a;
  std::vector<std::uint8_t> b;

  friend auto operator<=>(const NodeCoord&, const NodeCoord&) = default;

  /// Number of a-digits equal to 1.
  unsigned realized_t1() const;
  /// Number of b-digits equal to 2.
  unsigned interval_t2() const;
  /// Number of b-digits equal to 1.
  unsigned unique_t2() const;

  /// Identifier used in lattices and documents: the digits of a then b, as
  /// characters. Empty for the one-node signature (0, 0).
  std::string id() const;
};

/// One (t, m) cell of the limit-model decomposition: `multiplicity` node
/// types share the same per-type count `per_type`.
struct LimitTerm {
  unsigned t = 0;  // realized two-level factors
  unsigned m = 0;  // interval-realizing three-level factors
  BigInt multiplicity;  // C(k,t) * C(s,m) * 2^(s-m)
  BigInt per_type;      // 2^t * 4^m - 1
};

/// The counting identity  total = prime + sum over terms, fully expanded.
struct DecompositionReport {
  TheorySignature signature;
  BigInt total;        // 3^k * 6^s
  BigInt prime_count;  // 2^k * 3^s
  std::vector<LimitTerm> terms;
  BigInt limit_total;  // sum of multiplicity * per_type
  bool balanced = false;  // total == prime_count + limit_total
};

/// Model counts for a theory, optionally resolved per lattice node.
struct CountReport {
  TheorySignature signature;
  BigInt total;
  BigInt prime_count;
  BigInt limit_count;
  std::map<NodeCoord, BigInt> per_node;  // limit models per node type
};

/// 2^k * 3^s — nodes of the canonical lattice, equivalently prime models.
BigInt prime_model_count(const TheorySignature& sig);

/// 3^k * 6^s — countable models up to isomorphism.
BigInt countable_model_count(const TheorySignature& sig);

/// 2^t * 4^m - 1 — limit models over a node type with t realized two-level
/// factors and m interval-realizing three-level factors.
BigInt il_closed_form(unsigned t, unsigned m);

/// The canonical lattice of a signature as a labeled partial order: nodes are
/// the coordinates, ordered componentwise, labeled by the closed form.
/// Throws budget_error when the node count exceeds `max_nodes` (0 = no cap).
LabeledPreorder build_theory(const TheorySignature& sig,
                             std::uint64_t max_nodes = 0);

/// The two generating lattices: a single two-level chain and a single
/// three-level chain.
LabeledPreorder build_t1();
LabeledPreorder build_t2();

/// Expands the counting identity for a signature. Terms are listed with m
/// ascending and t ascending within each m, zero cells included.
DecompositionReport decomposition_report(const TheorySignature& sig);

/// Total limit models, computed by summing the decomposition and checked
/// against 3^k * 6^s - 2^k * 3^s; disagreement throws internal_error.
BigInt total_limit_count(const TheorySignature& sig);

/// Decides whether `count` is 3^k * 6^s for some signature and returns it.
/// The factorization is unique when it exists. Throws validation_error when
/// `count` is not positive.
std::optional<TheorySignature> validate_count(const BigInt& count);

/// Recognizes the RK quotient of `p` as a canonical lattice: factors the node
/// count to the single possible signature, then searches for a label- and
/// order-preserving isomorphism. Returns nullopt when either step fails.
std::optional<TheorySignature> identify(const LabeledPreorder& p);

/// Counts for the disjoint union of two theories given counts for each part:
/// signatures add, prime counts multiply, and
/// limit = l1*p2 + p1*l2 + l1*l2. Per-node tables compose coordinatewise
/// when both inputs carry them. Throws validation_error when an input's
/// numbers are inconsistent: total != prime + limit, or a per-node table
/// that misses nodes, has wrong-dimension coordinates, or does not sum to
/// the limit count.
CountReport compose_counts(const CountReport& x, const CountReport& y);

/// Counts for a signature straight from the closed forms. With
/// `with_per_node`, also tabulates limit models per node coordinate.
CountReport closed_form_counts(const TheorySignature& sig,
                               bool with_per_node = true);

/// Covering pairs of the canonical lattice, computed from coordinates alone:
/// covers increment exactly one digit by one. Sorted as hasse_edges sorts.
std::vector<IdPair> canonical_cover_edges(const TheorySignature& sig);

namespace detail {
/// Odometer step over coordinates for a signature, b-digits fastest and the
/// last digit fastest within each block. False once all coordinates are done.
bool advance_coord(NodeCoord& c);
}  // namespace detail

/// Calls `fn` once per node coordinate of the signature's lattice, in the
/// odometer order used across the library (a-block then b-block, last digit
/// fastest). `fn` receives a const NodeCoord&.
template <typename Fn>
void for_each_coord(const TheorySignature& sig, Fn&& fn) {
  NodeCoord c;
  c.a.assign(sig.k, 0);
  c.b.assign(sig.s, 0);
  do {
    fn(static_cast<const NodeCoord&>(c));
  } while (detail::advance_coord(c));
}

}  // namespace rklat
