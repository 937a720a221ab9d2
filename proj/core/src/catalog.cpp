#include "rklat/catalog.hpp"

#include "rklat/errors.hpp"

#include <algorithm>
#include <limits>

namespace rklat {

unsigned NodeCoord::realized_t1() const {
  return static_cast<unsigned>(std::count(a.begin(), a.end(), 1));
}

unsigned NodeCoord::interval_t2() const {
  return static_cast<unsigned>(std::count(b.begin(), b.end(), 2));
}

unsigned NodeCoord::unique_t2() const {
  return static_cast<unsigned>(std::count(b.begin(), b.end(), 1));
}

std::string NodeCoord::id() const {
  std::string out;
  out.reserve(a.size() + b.size());
  for (std::uint8_t d : a) out.push_back(static_cast<char>('0' + d));
  for (std::uint8_t d : b) out.push_back(static_cast<char>('0' + d));
  return out;
}

BigInt prime_model_count(const TheorySignature& sig) {
  return ipow(2, sig.k) * ipow(3, sig.s);
}

BigInt countable_model_count(const TheorySignature& sig) {
  return ipow(3, sig.k) * ipow(6, sig.s);
}

BigInt il_closed_form(unsigned t, unsigned m) {
  return ipow(2, t) * ipow(4, m) - 1;
}

namespace detail {

bool advance_coord(NodeCoord& c) {
  for (std::size_t j = c.b.size(); j-- > 0;) {
    if (c.b[j] < 2) {
      ++c.b[j];
      return true;
    }
    c.b[j] = 0;
  }
  for (std::size_t i = c.a.size(); i-- > 0;) {
    if (c.a[i] < 1) {
      ++c.a[i];
      return true;
    }
    c.a[i] = 0;
  }
  return false;
}

}  // namespace detail

namespace {

bool coord_leq(const NodeCoord& x, const NodeCoord& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] > y.a[i]) return false;
  for (std::size_t j = 0; j < x.b.size(); ++j)
    if (x.b[j] > y.b[j]) return false;
  return true;
}

}  // namespace

LabeledPreorder build_theory(const TheorySignature& sig,
                             std::uint64_t max_nodes) {
  const BigInt count = prime_model_count(sig);
  if (max_nodes != 0 && count > max_nodes)
    throw budget_error("lattice for (" + std::to_string(sig.k) + "," +
                       std::to_string(sig.s) + ") has " + count.str() +
                       " nodes, over the cap of " + std::to_string(max_nodes));
  if (count > std::numeric_limits<std::size_t>::max())
    throw budget_error("lattice node count " + count.str() +
                       " exceeds addressable memory");

  const std::size_t n = count.convert_to<std::size_t>();
  std::vector<NodeCoord> coords;
  coords.reserve(n);
  for_each_coord(sig, [&](const NodeCoord& c) { coords.push_back(c); });

  std::vector<std::string> ids;
  std::vector<BigInt> il;
  ids.reserve(n);
  il.reserve(n);
  for (const NodeCoord& c : coords) {
    ids.push_back(c.id());
    il.push_back(il_closed_form(c.realized_t1(), c.interval_t2()));
  }

  // Componentwise dominance is already reflexive and transitive, so the rows
  // can be filled directly; no closure pass needed.
  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coord_leq(coords[i], coords[j])) rows[i].set(j);

  return detail::assemble(std::move(ids), std::move(il), std::move(rows));
}

LabeledPreorder build_t1() { return build_theory({1, 0}); }

LabeledPreorder build_t2() { return build_theory({0, 1}); }

DecompositionReport decomposition_report(const TheorySignature& sig) {
  DecompositionReport report;
  report.signature = sig;
  report.total = countable_model_count(sig);
  report.prime_count = prime_model_count(sig);
  report.limit_total = 0;
  for (unsigned m = 0; m <= sig.s; ++m)
    for (unsigned t = 0; t <= sig.k; ++t) {
      LimitTerm term;
      term.t = t;
      term.m = m;
      term.multiplicity =
          binomial(sig.k, t) * binomial(sig.s, m) * ipow(2, sig.s - m);
      term.per_type = il_closed_form(t, m);
      report.limit_total += term.multiplicity * term.per_type;
      report.terms.push_back(std::move(term));
    }
  report.balanced = report.total == report.prime_count + report.limit_total;
  return report;
}

BigInt total_limit_count(const TheorySignature& sig) {
  DecompositionReport report = decomposition_report(sig);
  if (report.limit_total != report.total - report.prime_count)
    throw internal_error("decomposition terms do not sum to 3^k*6^s - 2^k*3^s");
  return report.limit_total;
}

std::optional<TheorySignature> validate_count(const BigInt& count) {
  if (count <= 0) throw validation_error("model count must be positive");
  BigInt rest = count;
  unsigned twos = 0, threes = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 3 == 0) {
    rest /= 3;
    ++threes;
  }
  // 3^k * 6^s = 2^s * 3^(k+s): the power of 2 gives s, the excess of 3s
  // over it gives k.
  if (rest != 1 || threes < twos) return std::nullopt;
  return TheorySignature{threes - twos, twos};
}

std::optional<TheorySignature> identify(const LabeledPreorder& p) {
  LabeledPreorder q = quotient_rk(p);
  std::size_t rest = q.size();
  unsigned twos = 0, threes = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 3 == 0) {
    rest /= 3;
    ++threes;
  }
  if (rest != 1) return std::nullopt;
  // Node counts 2^k * 3^s are distinct across signatures, so exactly one
  // candidate exists.
  TheorySignature candidate{twos, threes};
  if (!are_isomorphic(q, build_theory(candidate))) return std::nullopt;
  return candidate;
}

namespace {

void check_report(const CountReport& r, const char* which) {
  std::string who(which);
  if (r.total != r.prime_count + r.limit_count)
    throw validation_error(who + " report: total != prime + limit");
  if (r.per_node.empty()) return;
  if (BigInt(static_cast<std::uint64_t>(r.per_node.size())) != r.prime_count)
    throw validation_error(who +
                           " report: per-node table does not cover one node "
                           "per prime model");
  BigInt sum = 0;
  for (const auto& [coord, value] : r.per_node) {
    if (coord.a.size() != r.signature.k || coord.b.size() != r.signature.s)
      throw validation_error(who + " report: per-node coordinate of wrong "
                                   "dimension");
    if (value < 0)
      throw validation_error(who + " report: negative per-node count");
    sum += value;
  }
  if (sum != r.limit_count)
    throw validation_error(who +
                           " report: per-node table does not sum to the "
                           "limit count");
}

}  // namespace

CountReport compose_counts(const CountReport& x, const CountReport& y) {
  check_report(x, "first");
  check_report(y, "second");

  CountReport out;
  out.signature = {x.signature.k + y.signature.k,
                   x.signature.s + y.signature.s};
  out.prime_count = x.prime_count * y.prime_count;
  out.limit_count = x.limit_count * y.prime_count +
                    x.prime_count * y.limit_count +
                    x.limit_count * y.limit_count;
  out.total = x.total * y.total;
  if (out.total != out.prime_count + out.limit_count)
    throw internal_error("composed counts violate total = prime + limit");

  if (!x.per_node.empty() && !y.per_node.empty()) {
    BigInt sum = 0;
    for (const auto& [cx, vx] : x.per_node)
      for (const auto& [cy, vy] : y.per_node) {
        NodeCoord c;
        c.a.reserve(cx.a.size() + cy.a.size());
        c.a.insert(c.a.end(), cx.a.begin(), cx.a.end());
        c.a.insert(c.a.end(), cy.a.begin(), cy.a.end());
        c.b.reserve(cx.b.size() + cy.b.size());
        c.b.insert(c.b.end(), cx.b.begin(), cx.b.end());
        c.b.insert(c.b.end(), cy.b.begin(), cy.b.end());
        BigInt value = (vx + 1) * (vy + 1) - 1;
        sum += value;
        out.per_node.emplace(std::move(c), std::move(value));
      }
    if (sum != out.limit_count)
      throw internal_error("composed per-node table does not sum to the "
                           "limit count");
  }
  return out;
}

CountReport closed_form_counts(const TheorySignature& sig, bool with_per_node) {
  CountReport out;
  out.signature = sig;
  out.total = countable_model_count(sig);
  out.prime_count = prime_model_count(sig);
  out.limit_count = out.total - out.prime_count;
  if (with_per_node)
    for_each_coord(sig, [&](const NodeCoord& c) {
      out.per_node.emplace(c,
                           il_closed_form(c.realized_t1(), c.interval_t2()));
    });
  return out;
}

std::vector<IdPair> canonical_cover_edges(const TheorySignature& sig) {
  std::vector<IdPair> edges;
  for_each_coord(sig, [&](const NodeCoord& c) {
    // Covers in a product of chains raise exactly one digit by one.
    NodeCoord up = c;
    for (std::size_t i = 0; i < up.a.size(); ++i)
      if (up.a[i] == 0) {
        up.a[i] = 1;
        edges.emplace_back(c.id(), up.id());
        up.a[i] = 0;
      }
    for (std::size_t j = 0; j < up.b.size(); ++j)
      if (up.b[j] < 2) {
        ++up.b[j];
        edges.emplace_back(c.id(), up.id());
        --up.b[j];
      }
  });
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace rklat
