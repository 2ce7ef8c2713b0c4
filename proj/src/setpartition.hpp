#pragma once

#include <string>
#include <vector>

#include "qt_poly.hpp"

namespace macq {

// Set partition of {1..n}, stored as a restricted growth string: labels[k]
// is the block id of element k+1, blocks numbered by first appearance.
// That numbering sorts blocks by their minimum, so equality is structural.
class SetPartition {
 public:
  SetPartition(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition singletons(int n);
  static SetPartition one_block(int n);

  int ground_size() const { return int(labels_.size()); }
  int block_count() const { return nblocks_; }
  std::vector<std::vector<int>> blocks() const;
  const std::vector<int>& labels() const { return labels_; }

  bool operator==(const SetPartition& o) const { return labels_ == o.labels_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }
  bool operator<(const SetPartition& o) const { return labels_ < o.labels_; }

  // every block of *this contained in a block of o; mismatched ground sets
  // are an error
  bool refines(const SetPartition& o) const;
  SetPartition join(const SetPartition& o) const;
  SetPartition meet(const SetPartition& o) const;

  // all set partitions of [n], restricted growth string order
  static std::vector<SetPartition> enumerate(int n);
  // the interval [pi, sigma] in the refinement lattice
  static std::vector<SetPartition> interval(const SetPartition& pi,
                                            const SetPartition& sigma);

  // Moebius function of the refinement lattice; requires pi <= sigma
  static BigInt mobius(const SetPartition& pi, const SetPartition& sigma);
  // sum over pi <= omega <= sigma with omega v tau = sigma of mobius(pi, omega);
  // requires pi < tau <= sigma
  static BigInt weisner_sum(const SetPartition& pi, const SetPartition& tau,
                            const SetPartition& sigma);

  std::string str() const;  // e.g. "{1,3|2}"

 private:
  SetPartition() = default;
  std::vector<int> labels_;
  int nblocks_ = 0;
  static SetPartition from_labels(std::vector<int> raw);
};

// Set partitions of an arbitrary item list, as block lists.  Items keep
// their given values; used for cumulant sums over partitions of a subset.
std::vector<std::vector<std::vector<int>>> set_partitions_of(
    const std::vector<int>& items);

// mobius(pi, one_block) for a partition with b blocks: (-1)^{b-1} (b-1)!
BigInt mobius_to_top(int nblocks);

BigInt bell_number(int n);

}  // namespace macq
