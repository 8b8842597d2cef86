#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace weylsig {

using Composition = std::vector<int>;

inline constexpr int kPartitionCap = 30;

// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // Entries are positive, so vector order coincides with zero-padded lex order.
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct SkewShape {
  Partition outer, inner;
  SkewShape(Partition o, Partition i);
  int size() const { return outer.size() - inner.size(); }
};

Partition conjugate(const Partition& p);
std::strong_ordering lex_compare(const Composition& a, const Composition& b);
std::strong_ordering lex_compare(const Partition& a, const Partition& b);
Composition concat(const Composition& a, const Composition& b);
Composition entrywise_sum(const Composition& a, const Composition& b);
int effective_length(const Composition& a);
int total(const Composition& a);
bool contains(const Partition& outer, const Partition& inner);

// Sorted descending by lex_compare.
std::vector<Partition> partitions_of(int n, int cap = kPartitionCap);
// All partitions of n with at most max_len parts, lex descending.
std::vector<Partition> partitions_of_bounded(int n, int max_len);
// Drops zeros, sorts descending.
Partition sort_to_partition(const Composition& c);
// All non-negative tuples of the given length summing to n, lex descending.
std::vector<Composition> compositions_of(int n, int length);
// Every entrywise split a = x + y with x, y >= 0, as the list of x.
std::vector<Composition> sub_compositions(const Composition& a);

BigInt hook_dimension(const Partition& p);

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);
Partition parse_partition(const std::string& s);
Composition parse_composition(const std::string& s);

}  // namespace weylsig
