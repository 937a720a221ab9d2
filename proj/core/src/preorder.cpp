#include "rklat/preorder.hpp"

#include "rklat/errors.hpp"

#include <algorithm>
#include <tuple>

namespace rklat {

namespace detail {

LabeledPreorder assemble(std::vector<std::string> ids, std::vector<BigInt> il,
                         std::vector<boost::dynamic_bitset<>> rows) {
  if (ids.size() != il.size() || ids.size() != rows.size())
    throw internal_error("assemble: size mismatch");
  LabeledPreorder p;
  p.ids_ = std::move(ids);
  p.il_ = std::move(il);
  p.rows_ = std::move(rows);
  for (std::size_t i = 0; i < p.ids_.size(); ++i) p.index_[p.ids_[i]] = i;
  return p;
}

}  // namespace detail

std::size_t LabeledPreorder::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw validation_error("unknown node '" + std::string(id) + "'");
  return it->second;
}

bool LabeledPreorder::has_node(std::string_view id) const {
  return index_.find(id) != index_.end();
}

bool LabeledPreorder::leq(std::string_view lo, std::string_view hi) const {
  return leq(index_of(lo), index_of(hi));
}

BigInt LabeledPreorder::il_sum() const {
  BigInt sum = 0;
  for (const BigInt& v : il_) sum += v;
  return sum;
}

bool LabeledPreorder::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (rows_[i].test(j) && rows_[j].test(i)) return false;
  return true;
}

std::vector<IdPair> LabeledPreorder::strict_pairs() const {
  std::vector<IdPair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && rows_[i].test(j)) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

bool operator==(const LabeledPreorder& a, const LabeledPreorder& b) {
  return a.ids_ == b.ids_ && a.il_ == b.il_ && a.rows_ == b.rows_;
}

LabeledPreorder make_preorder(std::vector<std::string> nodes,
                              const std::vector<IdPair>& pairs,
                              const std::map<std::string, BigInt>& il) {
  if (nodes.empty()) throw validation_error("a preorder needs at least one node");

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!index.emplace(nodes[i], i).second)
      throw validation_error("duplicate node '" + nodes[i] + "'");

  std::vector<BigInt> labels(nodes.size());
  for (const auto& [id, value] : il) {
    auto it = index.find(id);
    if (it == index.end())
      throw validation_error("label for unknown node '" + id + "'");
    if (value < 0)
      throw validation_error("negative label on node '" + id + "'");
    labels[it->second] = value;
  }
  if (il.size() != nodes.size())
    for (const std::string& id : nodes)
      if (!il.count(id))
        throw validation_error("missing label for node '" + id + "'");

  std::vector<boost::dynamic_bitset<>> rows(
      nodes.size(), boost::dynamic_bitset<>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) rows[i].set(i);
  for (const auto& [lo, hi] : pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end())
      throw validation_error("order pair over unknown node '" + lo + "'");
    if (b == index.end())
      throw validation_error("order pair over unknown node '" + hi + "'");
    rows[a->second].set(b->second);
  }

  // Warshall, row-at-a-time: after pass `mid`, every path through nodes
  // <= mid is folded in.
  for (std::size_t mid = 0; mid < nodes.size(); ++mid)
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (i != mid && rows[i].test(mid)) rows[i] |= rows[mid];

  return detail::assemble(std::move(nodes), std::move(labels),
                          std::move(rows));
}

LabeledPreorder quotient_rk(const LabeledPreorder& p) {
  const std::size_t n = p.size();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, kUnassigned);
  std::vector<std::size_t> reps;  // member with lexicographically least id

  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != kUnassigned) continue;
    std::size_t c = reps.size();
    std::size_t rep = i;
    class_of[i] = c;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) {
        class_of[j] = c;
        if (p.id_of(j) < p.id_of(rep)) rep = j;
      }
    reps.push_back(rep);
  }

  std::vector<std::string> ids(reps.size());
  std::vector<BigInt> il(reps.size());
  std::vector<boost::dynamic_bitset<>> rows(
      reps.size(), boost::dynamic_bitset<>(reps.size()));
  for (std::size_t c = 0; c < reps.size(); ++c) ids[c] = p.id_of(reps[c]);
  for (std::size_t i = 0; i < n; ++i) il[class_of[i]] += p.il(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(i, j)) rows[class_of[i]].set(class_of[j]);

  return detail::assemble(std::move(ids), std::move(il), std::move(rows));
}

std::vector<IdPair> hasse_edges(const LabeledPreorder& p) {
  if (!p.is_antisymmetric())
    throw validation_error(
        "covering relation needs a partial order; quotient first");

  const std::size_t n = p.size();
  std::vector<boost::dynamic_bitset<>> strict_up(n,
                                                 boost::dynamic_bitset<>(n)),
      down(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq(i, j)) {
        strict_up[i].set(j);
        down[j].set(i);
      }

  std::vector<IdPair> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = strict_up[x].find_first();
         y != boost::dynamic_bitset<>::npos; y = strict_up[x].find_next(y)) {
      // x covers into y iff nothing sits strictly between them.
      auto between = strict_up[x] & down[y];
      if (between.none()) edges.emplace_back(p.id_of(x), p.id_of(y));
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

LabeledPreorder pareto_product(const LabeledPreorder& p,
                               const LabeledPreorder& q) {
  const std::size_t np = p.size(), nq = q.size(), n = np * nq;
  std::vector<std::string> ids;
  std::vector<BigInt> il;
  ids.reserve(n);
  il.reserve(n);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      ids.push_back(join_ids(p.id_of(i), q.id_of(j)));
      il.push_back((p.il(i) + 1) * (q.il(j) + 1) - 1);
    }

  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n));
  for (std::size_t i1 = 0; i1 < np; ++i1)
    for (std::size_t j1 = 0; j1 < nq; ++j1) {
      auto& row = rows[i1 * nq + j1];
      for (std::size_t i2 = 0; i2 < np; ++i2) {
        if (!p.leq(i1, i2)) continue;
        for (std::size_t j2 = 0; j2 < nq; ++j2)
          if (q.leq(j1, j2)) row.set(i2 * nq + j2);
      }
    }

  return detail::assemble(std::move(ids), std::move(il), std::move(rows));
}

namespace {

struct NodeSignature {
  BigInt il;
  std::size_t indeg = 0;   // strict predecessors
  std::size_t outdeg = 0;  // strict successors

  friend bool operator==(const NodeSignature&,
                         const NodeSignature&) = default;
  friend bool operator<(const NodeSignature& a, const NodeSignature& b) {
    if (a.il != b.il) return a.il < b.il;
    if (a.indeg != b.indeg) return a.indeg < b.indeg;
    return a.outdeg < b.outdeg;
  }
};

std::vector<NodeSignature> signatures(const LabeledPreorder& p) {
  const std::size_t n = p.size();
  std::vector<NodeSignature> sig(n);
  for (std::size_t i = 0; i < n; ++i) sig[i].il = p.il(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq(i, j)) {
        ++sig[i].outdeg;
        ++sig[j].indeg;
      }
  return sig;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const LabeledPreorder& p,
                                         const LabeledPreorder& q) {
  if (!p.is_antisymmetric() || !q.is_antisymmetric())
    throw validation_error(
        "isomorphism search needs partial orders; quotient first");
  if (p.size() != q.size()) return std::nullopt;

  const std::size_t n = p.size();
  auto psig = signatures(p);
  auto qsig = signatures(q);
  {
    auto ps = psig;
    auto qs = qsig;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return std::nullopt;
  }

  // Targets ordered by (signature, id) so the first witness found is the
  // same on every run.
  std::vector<std::size_t> q_order(n);
  for (std::size_t j = 0; j < n; ++j) q_order[j] = j;
  std::sort(q_order.begin(), q_order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(qsig[a], q.id_of(a)) < std::tie(qsig[b], q.id_of(b));
  });

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, kUnassigned);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t target : q_order) {
      if (used[target] || qsig[target] != psig[i]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < i && ok; ++prev) {
        std::size_t t = image[prev];
        ok = p.leq(prev, i) == q.leq(t, target) &&
             p.leq(i, prev) == q.leq(target, t);
      }
      if (!ok) continue;
      image[i] = target;
      used[target] = true;
      if (self(self, i + 1)) return true;
      image[i] = kUnassigned;
      used[target] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  IsoWitness witness;
  witness.mapping.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    witness.mapping.emplace_back(p.id_of(i), q.id_of(image[i]));
  return witness;
}

std::string join_ids(std::string_view left, std::string_view right) {
  std::string out;
  out.reserve(left.size() + right.size() + 1);
  auto append_escaped = [&out](std::string_view part) {
    for (char c : part) {
      if (c == '\\' || c == ',') out.push_back('\\');
      out.push_back(c);
    }
  };
  append_escaped(left);
  out.push_back(',');
  append_escaped(right);
  return out;
}

}  // namespace rklat
