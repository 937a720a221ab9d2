#include "rklat/models.hpp"

#include "rklat/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <vector>

using namespace rklat;

namespace {

std::vector<int> encoded(const ModelDescriptor& d) {
  std::vector<int> digits;
  for (T1Pattern p : d.t1) digits.push_back(static_cast<int>(p));
  for (T2Pattern p : d.t2) digits.push_back(static_cast<int>(p));
  return digits;
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("enumeration is exact and duplicate-free") {
  CHECK(ModelEnumeration({0, 0}).size() == 1);
  CHECK(ModelEnumeration({1, 0}).size() == 3);
  CHECK(ModelEnumeration({1, 1}).size() == 18);

  for (const TheorySignature sig : {TheorySignature{1, 1},
                                    TheorySignature{0, 2},
                                    TheorySignature{2, 1}}) {
    ModelEnumeration models(sig);
    std::set<std::vector<int>> seen;
    std::vector<int> previous;
    bool first = true;
    for (const ModelDescriptor& d : models) {
      const auto digits = encoded(d);
      CHECK(seen.insert(digits).second);
      if (!first) CHECK(previous < digits);  // strictly increasing, radix order
      previous = digits;
      first = false;
    }
    CHECK(seen.size() == models.size());
  }

  ModelEnumeration single({0, 0});
  const ModelDescriptor only = *single.begin();
  CHECK(only.t1.empty());
  CHECK(only.t2.empty());
  CHECK(classify(only) == ModelKind::Prime);
}

TEST_CASE("the first descriptor omits every type") {
  ModelEnumeration models({2, 2});
  const ModelDescriptor first = *models.begin();
  for (T1Pattern p : first.t1) CHECK(p == T1Pattern::Absent);
  for (T2Pattern p : first.t2) CHECK(p == T2Pattern::Absent);
}

TEST_CASE("enumeration respects its budget") {
  CHECK_THROWS_AS(ModelEnumeration({2, 2}, 10), budget_error);
  CHECK(ModelEnumeration({2, 2}, 324).size() == 324);  // exactly at budget
  CHECK_THROWS_AS(oracle_counts({3, 3}, 100), budget_error);
}

TEST_CASE("classification separates minimal realizations from the rest") {
  ModelDescriptor d;
  d.t1 = {T1Pattern::Absent};
  d.t2 = {T2Pattern::Absent};
  CHECK(classify(d) == ModelKind::Prime);

  d.t1 = {T1Pattern::LeastRealization};
  CHECK(classify(d) == ModelKind::Prime);
  d.t1 = {T1Pattern::OpenInterval};
  CHECK(classify(d) == ModelKind::Limit);

  d.t1 = {T1Pattern::Absent};
  for (T2Pattern p : {T2Pattern::Singleton, T2Pattern::ClosedClosed}) {
    d.t2 = {p};
    CHECK(classify(d) == ModelKind::Prime);
  }
  for (T2Pattern p : {T2Pattern::OpenClosed, T2Pattern::ClosedOpen,
                      T2Pattern::OpenOpen}) {
    d.t2 = {p};
    CHECK(classify(d) == ModelKind::Limit);
  }

  // One non-minimal realization anywhere makes the whole model limit.
  d.t1 = {T1Pattern::OpenInterval};
  d.t2 = {T2Pattern::Singleton};
  CHECK(classify(d) == ModelKind::Limit);
}

TEST_CASE("classification agrees with one-component restrictions") {
  for (const TheorySignature sig : {TheorySignature{1, 1},
                                    TheorySignature{2, 1},
                                    TheorySignature{1, 2}}) {
    for (const ModelDescriptor& d : ModelEnumeration(sig)) {
      bool any_part_limit = false;
      for (T1Pattern p : d.t1) {
        ModelDescriptor part;
        part.t1 = {p};
        if (classify(part) == ModelKind::Limit) any_part_limit = true;
      }
      for (T2Pattern p : d.t2) {
        ModelDescriptor part;
        part.t2 = {p};
        if (classify(part) == ModelKind::Limit) any_part_limit = true;
      }
      CHECK((classify(d) == ModelKind::Limit) == any_part_limit);
    }
  }
}

TEST_CASE("models land on the node realizing their types") {
  ModelDescriptor d;
  d.t1 = {T1Pattern::Absent, T1Pattern::Absent};
  d.t2 = {T2Pattern::Absent};
  const NodeCoord bottom = node_of(d);
  CHECK(bottom.a == std::vector<std::uint8_t>{0, 0});
  CHECK(bottom.b == std::vector<std::uint8_t>{0});

  d.t1 = {T1Pattern::OpenInterval, T1Pattern::LeastRealization};
  d.t2 = {T2Pattern::Singleton};
  const NodeCoord mid = node_of(d);
  CHECK(mid.a == std::vector<std::uint8_t>{1, 1});
  CHECK(mid.b == std::vector<std::uint8_t>{1});

  d.t1 = {T1Pattern::Absent, T1Pattern::Absent};
  d.t2 = {T2Pattern::OpenOpen};
  CHECK(node_of(d).b == std::vector<std::uint8_t>{2});
}

TEST_CASE("each node carries exactly one prime model") {
  for (const TheorySignature sig : {TheorySignature{3, 0},
                                    TheorySignature{0, 3},
                                    TheorySignature{2, 1},
                                    TheorySignature{1, 2}}) {
    std::map<NodeCoord, std::uint64_t> primes, all;
    for (const ModelDescriptor& d : ModelEnumeration(sig)) {
      const NodeCoord c = node_of(d);
      ++all[c];
      if (classify(d) == ModelKind::Prime) ++primes[c];
    }
    CHECK(all.size() ==
          support::upow(2, sig.k) * support::upow(3, sig.s));
    for (const auto& [coord, count] : primes) {
      (void)coord;
      CHECK(count == 1);
    }
    CHECK(primes.size() == all.size());
    for (const auto& [coord, count] : all)
      CHECK(count == support::upow(2, coord.realized_t1()) *
                         support::upow(4, coord.interval_t2()));
  }
}

TEST_CASE("oracle totals") {
  const auto r20 = oracle_counts({2, 0});
  CHECK(r20.total == 9);
  CHECK(r20.prime_count == 4);
  CHECK(r20.limit_count == 5);

  const auto r03 = oracle_counts({0, 3});
  CHECK(r03.total == 216);
  CHECK(r03.prime_count == 27);
  CHECK(r03.limit_count == 189);

  const auto r12 = oracle_counts({1, 2});
  CHECK(r12.total == 108);
  CHECK(r12.prime_count == 18);
  CHECK(r12.limit_count == 90);

  const auto r00 = oracle_counts({0, 0});
  CHECK(r00.total == 1);
  CHECK(r00.prime_count == 1);
  CHECK(r00.limit_count == 0);
}

TEST_CASE("oracle per-node table") {
  const auto report = oracle_counts({1, 1});
  REQUIRE(report.per_node.size() == 6);
  const std::map<std::string, BigInt> expected{
      {"00", 0}, {"01", 0}, {"02", 3}, {"10", 1}, {"11", 1}, {"12", 7}};
  for (const auto& [coord, count] : report.per_node)
    CHECK(count == expected.at(coord.id()));
  CHECK(report.per_node == closed_form_counts({1, 1}).per_node);
}

}  // TEST_SUITE
