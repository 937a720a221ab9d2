#include "rklat/models.hpp"

#include "rklat/errors.hpp"

namespace rklat {

ModelKind classify(const ModelDescriptor& m) {
  for (T1Pattern p : m.t1)
    if (p == T1Pattern::OpenInterval) return ModelKind::Limit;
  for (T2Pattern p : m.t2)
    if (p == T2Pattern::OpenClosed || p == T2Pattern::ClosedOpen ||
        p == T2Pattern::OpenOpen)
      return ModelKind::Limit;
  return ModelKind::Prime;
}

NodeCoord node_of(const ModelDescriptor& m) {
  NodeCoord c;
  c.a.reserve(m.t1.size());
  c.b.reserve(m.t2.size());
  for (T1Pattern p : m.t1)
    c.a.push_back(p == T1Pattern::Absent ? 0 : 1);
  for (T2Pattern p : m.t2) {
    if (p == T2Pattern::Absent)
      c.b.push_back(0);
    else if (p == T2Pattern::Singleton)
      c.b.push_back(1);
    else
      c.b.push_back(2);
  }
  return c;
}

ModelEnumeration::ModelEnumeration(const TheorySignature& sig,
                                   std::uint64_t budget)
    : sig_(sig) {
  const BigInt count = countable_model_count(sig);
  if (count > budget)
    throw budget_error("signature (" + std::to_string(sig.k) + "," +
                       std::to_string(sig.s) + ") has " + count.str() +
                       " models, over the enumeration budget of " +
                       std::to_string(budget));
  count_ = count.convert_to<std::uint64_t>();
}

ModelEnumeration::iterator::iterator(std::uint64_t index, std::uint64_t count,
                                     const TheorySignature& sig)
    : index_(index), count_(count) {
  current_.t1.assign(sig.k, T1Pattern::Absent);
  current_.t2.assign(sig.s, T2Pattern::Absent);
}

ModelEnumeration::iterator& ModelEnumeration::iterator::operator++() {
  ++index_;
  if (index_ >= count_) return *this;
  // Mixed-radix odometer, last t2 digit fastest; carries run right to left
  // through the t2 block into the t1 block.
  for (std::size_t j = current_.t2.size(); j-- > 0;) {
    if (current_.t2[j] != T2Pattern::OpenOpen) {
      current_.t2[j] = static_cast<T2Pattern>(
          static_cast<std::uint8_t>(current_.t2[j]) + 1);
      return *this;
    }
    current_.t2[j] = T2Pattern::Absent;
  }
  for (std::size_t i = current_.t1.size(); i-- > 0;) {
    if (current_.t1[i] != T1Pattern::OpenInterval) {
      current_.t1[i] = static_cast<T1Pattern>(
          static_cast<std::uint8_t>(current_.t1[i]) + 1);
      return *this;
    }
    current_.t1[i] = T1Pattern::Absent;
  }
  throw internal_error("model enumeration ran past its count");
}

CountReport oracle_counts(const TheorySignature& sig, std::uint64_t budget) {
  ModelEnumeration models(sig, budget);

  const std::uint64_t node_count =
      prime_model_count(sig).convert_to<std::uint64_t>();
  std::vector<std::uint64_t> limit_tally(node_count, 0);
  std::uint64_t prime_tally = 0;

  for (const ModelDescriptor& d : models) {
    // Rank of the model's node: a-digits then b-digits, most significant
    // first — the same order for_each_coord walks nodes in.
    std::uint64_t rank = 0;
    for (T1Pattern p : d.t1)
      rank = rank * 2 + (p == T1Pattern::Absent ? 0 : 1);
    for (T2Pattern p : d.t2) {
      std::uint64_t digit = 2;
      if (p == T2Pattern::Absent)
        digit = 0;
      else if (p == T2Pattern::Singleton)
        digit = 1;
      rank = rank * 3 + digit;
    }
    if (classify(d) == ModelKind::Limit)
      ++limit_tally[rank];
    else
      ++prime_tally;
  }

  CountReport report;
  report.signature = sig;
  report.prime_count = prime_tally;
  report.limit_count = 0;

  std::uint64_t rank = 0;
  for_each_coord(sig, [&](const NodeCoord& c) {
    const BigInt tallied = limit_tally[rank++];
    if (tallied != il_closed_form(c.realized_t1(), c.interval_t2()))
      throw internal_error("oracle tally for node '" + c.id() +
                           "' disagrees with the closed form");
    report.limit_count += tallied;
    report.per_node.emplace(c, tallied);
  });

  report.total = report.prime_count + report.limit_count;
  if (report.prime_count != prime_model_count(sig))
    throw internal_error("oracle prime tally disagrees with 2^k*3^s");
  if (report.total != countable_model_count(sig))
    throw internal_error("oracle total disagrees with 3^k*6^s");
  return report;
}

}  // namespace rklat
