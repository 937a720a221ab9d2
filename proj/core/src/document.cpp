#include "rklat/document.hpp"

#include "rklat/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>

namespace rklat {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

}  // namespace

PreorderDocument to_document(const LabeledPreorder& p,
                             std::optional<DocumentMeta> meta) {
  PreorderDocument doc;
  doc.nodes.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    doc.nodes.push_back({p.id_of(i), p.il(i)});
  // Covers regenerate a partial order exactly; anything with mutual
  // domination needs every strict pair spelled out.
  doc.order = p.is_antisymmetric() ? hasse_edges(p) : p.strict_pairs();
  doc.meta = std::move(meta);
  return doc;
}

LabeledPreorder to_preorder(const PreorderDocument& doc) {
  std::vector<std::string> nodes;
  std::map<std::string, BigInt> il;
  nodes.reserve(doc.nodes.size());
  for (const PreorderDocument::Node& node : doc.nodes) {
    nodes.push_back(node.id);
    il[node.id] = node.il;
  }
  return make_preorder(std::move(nodes), doc.order, il);
}

PreorderDocument canonical_document(const TheorySignature& sig) {
  PreorderDocument doc;
  for_each_coord(sig, [&](const NodeCoord& c) {
    doc.nodes.push_back(
        {c.id(), il_closed_form(c.realized_t1(), c.interval_t2())});
  });
  doc.order = canonical_cover_edges(sig);
  doc.meta = DocumentMeta{sig, true};
  return doc;
}

std::string serialize_document(const PreorderDocument& doc) {
  ordered_json j;
  auto& nodes = j["nodes"] = ordered_json::array();
  for (const PreorderDocument::Node& node : doc.nodes) {
    ordered_json item;
    item["id"] = node.id;
    item["il"] = node.il.str();
    nodes.push_back(std::move(item));
  }
  auto& order = j["order"] = ordered_json::array();
  for (const auto& [lo, hi] : doc.order)
    order.push_back(ordered_json::array({lo, hi}));
  if (doc.meta) {
    auto& meta = j["meta"] = ordered_json::object();
    if (doc.meta->signature)
      meta["signature"] =
          ordered_json::array({doc.meta->signature->k, doc.meta->signature->s});
    if (doc.meta->canonical) meta["canonical"] = *doc.meta->canonical;
  }
  return j.dump(2) + "\n";
}

namespace {

void require_keys(const json& object, std::initializer_list<const char*> keys,
                  const char* where) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    if (std::find_if(keys.begin(), keys.end(), [&](const char* allowed) {
          return key == allowed;
        }) == keys.end())
      throw parse_error("unexpected key '" + key + "' in " + where);
  }
}

unsigned parse_signature_part(const json& value) {
  if (!value.is_number_unsigned())
    throw parse_error("meta.signature entries must be non-negative integers");
  auto wide = value.get<std::uint64_t>();
  if (wide > std::numeric_limits<unsigned>::max())
    throw parse_error("meta.signature entry out of range");
  return static_cast<unsigned>(wide);
}

}  // namespace

PreorderDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }

  if (!j.is_object()) throw parse_error("document must be a JSON object");
  require_keys(j, {"nodes", "order", "meta"}, "document");
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw parse_error("document needs a 'nodes' array");
  if (!j.contains("order") || !j["order"].is_array())
    throw parse_error("document needs an 'order' array");

  PreorderDocument doc;
  for (const json& item : j["nodes"]) {
    if (!item.is_object()) throw parse_error("node entries must be objects");
    require_keys(item, {"id", "il"}, "node entry");
    if (!item.contains("id") || !item["id"].is_string())
      throw parse_error("node entries need a string 'id'");
    if (!item.contains("il") || !item["il"].is_string())
      throw parse_error("node entries need a decimal-string 'il'");
    doc.nodes.push_back({item["id"].get<std::string>(),
                         parse_decimal(item["il"].get<std::string>())});
  }
  for (const json& pair : j["order"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string())
      throw parse_error("order entries must be [id, id] pairs");
    doc.order.emplace_back(pair[0].get<std::string>(),
                           pair[1].get<std::string>());
  }
  if (j.contains("meta")) {
    const json& m = j["meta"];
    if (!m.is_object()) throw parse_error("meta must be an object");
    require_keys(m, {"signature", "canonical"}, "meta");
    DocumentMeta meta;
    if (m.contains("signature")) {
      const json& sig = m["signature"];
      if (!sig.is_array() || sig.size() != 2)
        throw parse_error("meta.signature must be a [k, s] pair");
      meta.signature =
          TheorySignature{parse_signature_part(sig[0]),
                          parse_signature_part(sig[1])};
    }
    if (m.contains("canonical")) {
      if (!m["canonical"].is_boolean())
        throw parse_error("meta.canonical must be a boolean");
      meta.canonical = m["canonical"].get<bool>();
    }
    doc.meta = std::move(meta);
  }
  return doc;
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_dot(const LabeledPreorder& p) {
  const std::vector<IdPair> covers = hasse_edges(p);  // rejects preorders
  const std::size_t n = p.size();

  // Longest-path height above the minimal nodes; nodes sorted by strict
  // predecessor count are already in topological order.
  std::vector<std::size_t> pred_count(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq(i, j)) ++pred_count[j];
  std::vector<std::size_t> topo(n);
  for (std::size_t i = 0; i < n; ++i) topo[i] = i;
  std::sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
    return pred_count[a] < pred_count[b];
  });

  std::vector<std::vector<std::size_t>> cover_preds(n);
  for (const auto& [lo, hi] : covers)
    cover_preds[p.index_of(hi)].push_back(p.index_of(lo));

  std::vector<std::size_t> height(n, 0);
  for (std::size_t v : topo)
    for (std::size_t u : cover_preds[v])
      height[v] = std::max(height[v], height[u] + 1);

  std::map<std::size_t, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < n; ++i) levels[height[i]].push_back(i);

  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(p.id_of(i)) +
           "\\nIL=" + p.il(i).str() + "\"];\n";
  }
  for (const auto& [lo, hi] : covers)
    out += "  n" + std::to_string(p.index_of(lo)) + " -> n" +
           std::to_string(p.index_of(hi)) + ";\n";
  for (const auto& [level, members] : levels) {
    (void)level;
    out += "  { rank=same;";
    for (std::size_t i : members) out += " n" + std::to_string(i) + ";";
    out += " }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rklat
