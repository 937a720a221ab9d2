#pragma once

#include "rklat/catalog.hpp"
#include "rklat/preorder.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rklat {

/// Optional annotations carried by a serialized preorder.
struct DocumentMeta {
  std::optional<TheorySignature> signature;
  std::optional<bool> canonical;

  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

/// Interchange form of a labeled preorder. `order` holds generator pairs
/// only; the relation a reader should work with is their reflexive-transitive
/// closure, which to_preorder computes.
struct PreorderDocument {
  struct Node {
    std::string id;
    BigInt il;

    friend bool operator==(const Node&, const Node&) = default;
  };

  std::vector<Node> nodes;
  std::vector<IdPair> order;
  std::optional<DocumentMeta> meta;

  friend bool operator==(const PreorderDocument&,
                         const PreorderDocument&) = default;
};

/// Snapshot of a preorder. Partial orders are written with their covering
/// pairs as generators; preorders with nontrivial mutual domination fall back
/// to all strict pairs.
PreorderDocument to_document(const LabeledPreorder& p,
                             std::optional<DocumentMeta> meta = std::nullopt);

/// Rebuilds the preorder a document denotes (closure of its generators).
/// Structural problems — duplicate ids, unknown references, negative labels —
/// surface as the validation_error make_preorder throws.
LabeledPreorder to_preorder(const PreorderDocument& doc);

/// The canonical lattice of a signature as a document, written directly from
/// coordinates (nodes in odometer order, covers as generators) without
/// materializing the closure; practical for lattices far beyond what
/// build_theory handles. Meta carries the signature and canonical = true.
PreorderDocument canonical_document(const TheorySignature& sig);

/// JSON text for a document: object keys `nodes`, `order`, `meta`; labels as
/// decimal strings. Two-space indentation, trailing newline.
std::string serialize_document(const PreorderDocument& doc);

/// Parses JSON text produced by serialize_document (or written by hand to the
/// same shape). Unknown keys, wrong types, or malformed labels throw
/// parse_error; this guards shape only, so a parsed document may still fail
/// to_preorder's validation.
PreorderDocument parse_document(const std::string& text);

/// Graphviz rendering of a partial order's covering relation, edges pointing
/// upward and nodes grouped rank=same by height. Throws validation_error on
/// inputs that are not antisymmetric (quotient first).
std::string render_dot(const LabeledPreorder& p);

}  // namespace rklat
