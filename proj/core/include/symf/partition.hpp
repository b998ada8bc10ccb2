#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symf/arith.hpp"

namespace symf {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  /// Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zeros; negative parts throw.
  static Partition from_unsorted(std::vector<int> parts);
  /// (1^n)
  static Partition column(int n);
  /// (n), or () when n == 0.
  static Partition row(int n);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based); 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int operator[](std::size_t i) const { return part(i); }
  int multiplicity(int value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic order on the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// The artifact-wide canonical order: by size, then descending
/// lexicographic within a size, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

template <class V>
using PartitionMap = std::map<Partition, V, CanonicalLess>;

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Cached enumeration with an index lookup, shared across threads.
struct PartitionList {
  std::vector<Partition> items;
  std::unordered_map<Partition, std::size_t, PartitionHash> index;

  std::size_t index_of(const Partition& p) const { return index.at(p); }
};
const PartitionList& partition_list(int n);

Partition conjugate(const Partition& lambda);
/// Dominance order; throws DomainError when |lambda| != |mu|.
bool dominates(const Partition& lambda, const Partition& mu);
/// Young-diagram containment mu ⊆ lambda.
bool contains(const Partition& lambda, const Partition& mu);
/// Multiset union of parts, re-sorted.
Partition merge(const Partition& a, const Partition& b);
/// Every part multiplied by k.
Partition scale_parts(const Partition& lambda, int k);

/// z_λ = ∏ i^{m_i} m_i!
Integer z_value(const Partition& lambda);
/// n!/z_λ, the number of permutations of cycle type λ.
Integer count_of_type(const Partition& lambda);

/// "3,2,1" or "()" for the empty partition.
std::string to_string(const Partition& lambda);
/// Inverse of to_string. Parts must be positive and weakly decreasing;
/// throws SyntaxError otherwise.
Partition parse_partition(std::string_view text);

}  // namespace symf
