#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsym/bigint.hpp"

namespace ncsym {

// A set partition of {1..n}, stored as its restricted growth string: entry
// i (zero-based) is the block of element i+1, blocks numbered by first
// appearance, which equals numbering blocks by their minimum element. The
// empty partition (n = 0) is a valid value and the default.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<int> rgs);

  static SetPartition singletons(int n);  // bottom of the lattice
  static SetPartition one_block(int n);   // top of the lattice

  // Blocks must be disjoint, non-empty, and cover {1..n} exactly.
  static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);

  // Relabels disjoint sets of arbitrary positive integers order-preservingly
  // onto {1..m} and builds the resulting partition.
  static SetPartition standardized(const std::vector<std::vector<int>>& sets);

  // Partition of the positions {1..m} of a sequence by equal values.
  static SetPartition type_of(const std::vector<int>& values);

  int size() const { return static_cast<int>(rgs_.size()); }
  int length() const { return length_; }  // number of blocks
  const std::vector<int>& rgs() const { return rgs_; }
  int block_of(int element) const;  // element is 1-based
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const SetPartition&) const = default;
  std::strong_ordering operator<=>(const SetPartition& other) const;

 private:
  std::vector<int> rgs_;
  int length_ = 0;
};

// Refinement order: every block of a lies inside a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

SetPartition meet(const SetPartition& a, const SetPartition& b);
SetPartition join(const SetPartition& a, const SetPartition& b);

// Places b on {n+1..n+m} after a; the monoid unit is the empty partition.
SetPartition concat(const SetPartition& a, const SetPartition& b);

// Inverse of concat at cut k: both sides exist iff no block crosses the cut.
std::optional<std::pair<SetPartition, SetPartition>> split(
    const SetPartition& a, int k);

// Sub-partition spanned by the blocks with the given 1-based indices,
// standardized onto an initial segment.
SetPartition restrict_blocks(const SetPartition& a,
                             const std::vector<int>& block_indices);

// Block sizes, weakly decreasing.
std::vector<int> shape(const SetPartition& a);

// Text grammar: "e" for the empty partition, otherwise blocks joined by '|',
// elements inside a block joined by ',', no whitespace. format() emits the
// canonical form (ascending inside blocks, blocks by ascending minimum).
SetPartition parse_partition(const std::string& text);
std::string format_partition(const SetPartition& a);
std::ostream& operator<<(std::ostream&, const SetPartition&);

// All partitions of {1..n} in enumeration order (descending rgs-lex: the
// all-singletons partition first, the one-block partition last). The vector
// is built once per n and cached; n is capped to keep memory sane.
const std::vector<SetPartition>& partitions_of(int n);

Int bell(int n);

}  // namespace ncsym
