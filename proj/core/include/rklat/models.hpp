#pragma once

#include "rklat/catalog.hpp"

#include <cstdint>
#include <iterator>
#include <vector>

namespace rklat {

/// How a model realizes one two-level factor.
enum class T1Pattern : std::uint8_t {
  Absent = 0,            // the nonisolated type is omitted
  LeastRealization = 1,  // realized with a least element
  OpenInterval = 2,      // realized as an open interval, no least element
};

/// How a model realizes one three-level factor.
enum class T2Pattern : std::uint8_t {
  Absent = 0,       // the top type is omitted
  Singleton = 1,    // a single point
  ClosedClosed = 2, // an interval containing both endpoint limits
  OpenClosed = 3,   // left endpoint limit missing
  ClosedOpen = 4,   // right endpoint limit missing
  OpenOpen = 5,     // both endpoint limits missing
};

/// A countable model of a product theory, one realization pattern per factor.
struct ModelDescriptor {
  std::vector<T1Pattern> t1;
  std::vector<T2Pattern> t2;

  friend bool operator==(const ModelDescriptor&,
                         const ModelDescriptor&) = default;
};

enum class ModelKind { Prime, Limit };

/// Prime iff every factor is realized in its minimal way: two-level factors
/// absent or with a least realization, three-level factors absent, a
/// singleton, or a two-sided-closed interval.
ModelKind classify(const ModelDescriptor& m);

/// The lattice node a model sits over: a-digit 0 when the factor is absent
/// and 1 otherwise; b-digit 0 when absent, 1 for a singleton, 2 for any
/// interval shape.
NodeCoord node_of(const ModelDescriptor& m);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Lazily enumerates every countable model of a signature, 3^k * 6^s in all,
/// in mixed-radix order (t1 digits then t2 digits, the last digit fastest).
/// Construction throws budget_error when the count exceeds `budget`.
class ModelEnumeration {
 public:
  ModelEnumeration(const TheorySignature& sig,
                   std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t size() const { return count_; }
  const TheorySignature& signature() const { return sig_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ModelDescriptor;
    using difference_type = std::ptrdiff_t;
    using pointer = const ModelDescriptor*;
    using reference = const ModelDescriptor&;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    friend class ModelEnumeration;
    iterator(std::uint64_t index, std::uint64_t count,
             const TheorySignature& sig);

    std::uint64_t index_ = 0;
    std::uint64_t count_ = 0;
    ModelDescriptor current_;
  };

  iterator begin() const { return iterator(0, count_, sig_); }
  iterator end() const { return iterator(count_, count_, sig_); }

 private:
  TheorySignature sig_;
  std::uint64_t count_ = 0;
};

/// Brute-force counts: enumerates every model, classifies it, and tallies
/// limit models per node. The tallies are checked against the closed forms
/// node by node before being returned; any mismatch throws internal_error.
/// Enumeration size over `budget` throws budget_error.
CountReport oracle_counts(const TheorySignature& sig,
                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace rklat
